#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <type_traits>
#include <vector>

namespace wgrect {

/// Square matrix in compressed-row layout. Columns are sorted within a row.
struct CsrMatrix {
  int n = 0;
  std::vector<std::int64_t> row_ptr{0};
  std::vector<int> col;
  std::vector<double> val;

  std::int64_t nnz() const noexcept { return static_cast<std::int64_t>(val.size()); }
  /// y = A x. y is resized to n.
  void multiply(std::span<const double> x, std::vector<double>& y) const;
  std::vector<double> diagonal() const;
  /// Stored entry (i, j), or 0 if it is not in the pattern.
  double at(int i, int j) const;
  /// Row-major dense copy.
  std::vector<double> to_dense() const;
};

/// Accumulates (row, col, value) contributions and compresses them into CSR.
/// Duplicates are summed in insertion order, so the result depends only on
/// the order of add() calls.
class TripletBuilder {
public:
  explicit TripletBuilder(int n) : n_(n) {}
  void reserve(std::size_t count) { entries_.reserve(count); }
  void add(int row, int col, double value) { entries_.push_back({row, col, value}); }
  CsrMatrix build() const;

private:
  struct Entry {
    int row;
    int col;
    double value;
  };
  int n_;
  std::vector<Entry> entries_;
};

/// One "row col value" line per stored entry, 0-based, 17 significant digits.
void write_coordinate(std::ostream& os, const CsrMatrix& a);

/// Pairwise (cascade) sum of term(k) for k in [begin, end): blocks of up to
/// 32 terms are summed left to right, larger ranges split in half. The tree
/// depends only on the range, so results are reproducible. term is called
/// once per index in increasing order and may have side effects. T is double
/// or std::array<double, N> (summed componentwise).
template <class T, class Term>
T pairwise_sum(std::size_t begin, std::size_t end, Term& term) {
  constexpr std::size_t kBlock = 32;
  if (end - begin <= kBlock) {
    T s{};
    for (std::size_t k = begin; k < end; ++k) {
      const T t = term(k);
      if constexpr (std::is_same_v<T, double>) {
        s += t;
      } else {
        for (std::size_t c = 0; c < s.size(); ++c) s[c] += t[c];
      }
    }
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  T a = pairwise_sum<T>(begin, mid, term);
  const T b = pairwise_sum<T>(mid, end, term);
  if constexpr (std::is_same_v<T, double>) {
    a += b;
  } else {
    for (std::size_t c = 0; c < a.size(); ++c) a[c] += b[c];
  }
  return a;
}

/// pairwise_sum of x[k] * y[k].
double pairwise_dot(std::span<const double> x, std::span<const double> y);

}  // namespace wgrect

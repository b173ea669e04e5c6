#include "wgrect/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "wgrect/error.hpp"

namespace wgrect {

void CsrMatrix::multiply(std::span<const double> x, std::vector<double>& y) const {
  y.resize(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (auto k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(n, 0.0);
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
  return d;
}

double CsrMatrix::at(int i, int j) const {
  const auto first = col.begin() + row_ptr[i];
  const auto last = col.begin() + row_ptr[i + 1];
  const auto it = std::lower_bound(first, last, j);
  if (it == last || *it != j) return 0.0;
  return val[it - col.begin()];
}

std::vector<double> CsrMatrix::to_dense() const {
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (auto k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      d[static_cast<std::size_t>(i) * n + col[k]] = val[k];
    }
  }
  return d;
}

CsrMatrix TripletBuilder::build() const {
  for (const Entry& e : entries_) {
    if (e.row < 0 || e.row >= n_ || e.col < 0 || e.col >= n_) {
      throw Error(ErrorCode::InvalidArgument, "TripletBuilder: index out of range");
    }
  }
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Entry& ea = entries_[a];
    const Entry& eb = entries_[b];
    return ea.row != eb.row ? ea.row < eb.row : ea.col < eb.col;
  });

  CsrMatrix m;
  m.n = n_;
  m.row_ptr.assign(n_ + 1, 0);
  for (std::size_t k = 0; k < order.size();) {
    const Entry& first = entries_[order[k]];
    double sum = 0.0;
    std::size_t l = k;
    for (; l < order.size(); ++l) {
      const Entry& e = entries_[order[l]];
      if (e.row != first.row || e.col != first.col) break;
      sum += e.value;
    }
    m.col.push_back(first.col);
    m.val.push_back(sum);
    ++m.row_ptr[first.row + 1];
    k = l;
  }
  for (int i = 0; i < n_; ++i) m.row_ptr[i + 1] += m.row_ptr[i];
  return m;
}

void write_coordinate(std::ostream& os, const CsrMatrix& a) {
  for (int i = 0; i < a.n; ++i) {
    for (auto k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      os << fmt::format("{} {} {:.17g}\n", i, a.col[k], a.val[k]);
    }
  }
}

double pairwise_dot(std::span<const double> x, std::span<const double> y) {
  auto term = [&](std::size_t k) { return x[k] * y[k]; };
  return pairwise_sum<double>(0, x.size(), term);
}

}  // namespace wgrect

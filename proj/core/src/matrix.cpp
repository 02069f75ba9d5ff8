#include "klrw/matrix.hpp"

#include <stdexcept>

namespace klrw {

namespace {

// Row-echelon elimination in place.  Returns the pivot column of each pivot
// row, in order.  `aug` columns at the right are carried along but never
// chosen as pivots.
std::vector<std::size_t> echelon(std::vector<Rat>& a, std::size_t rows,
                                 std::size_t cols, std::size_t aug) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col + aug < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t c = col; c < cols; ++c)
        std::swap(a[piv * cols + c], a[row * cols + c]);
    Rat lead = a[row * cols + col];
    for (std::size_t c = col; c < cols; ++c) a[row * cols + c] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r * cols + col] == 0) continue;
      Rat f = a[r * cols + col];
      for (std::size_t c = col; c < cols; ++c)
        a[r * cols + c] -= f * a[row * cols + c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int RatMatrix::rank() const {
  std::vector<Rat> a = a_;
  return static_cast<int>(echelon(a, rows_, cols_, 0).size());
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
  std::size_t cols = cols_ + 1;
  std::vector<Rat> a(rows_ * cols);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) a[r * cols + c] = at(r, c);
    a[r * cols + cols_] = b[r];
  }
  auto pivots = echelon(a, rows_, cols, 1);
  // Inconsistent iff some row is (0 ... 0 | nonzero).
  for (std::size_t r = pivots.size(); r < rows_; ++r)
    if (a[r * cols + cols_] != 0) return std::nullopt;
  std::vector<Rat> x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k * cols + cols_];
  return x;
}

std::vector<std::vector<Rat>> RatMatrix::kernel_basis() const {
  std::vector<Rat> a = a_;
  auto pivots = echelon(a, rows_, cols_, 0);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -a[k * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_mod_span(
    const std::vector<std::vector<Rat>>& span,
    const std::vector<std::vector<Rat>>& candidates, std::size_t dim) {
  std::vector<std::vector<Rat>> cols = span;
  std::vector<std::size_t> chosen;
  auto rank_of = [&](const std::vector<std::vector<Rat>>& vs) {
    RatMatrix m(dim, vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
      for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = vs[c][r];
    return m.rank();
  };
  int r = rank_of(cols);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    cols.push_back(candidates[k]);
    int r2 = rank_of(cols);
    if (r2 > r) {
      chosen.push_back(k);
      r = r2;
    } else {
      cols.pop_back();
    }
  }
  return chosen;
}

}  // namespace klrw

#ifndef KLRW_MATRIX_HPP
#define KLRW_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "klrw/rational.hpp"

namespace klrw {

// Dense matrix over the rationals.  The graded slices that show up in the
// exactness and cohomology checks have at most a few hundred rows or
// columns, so plain rational Gaussian elimination is plenty.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  int rank() const;

  // One solution of M x = b with free variables set to zero, or nullopt if
  // the system is inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  // Basis of { x : M x = 0 }, one vector per free column.
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Indices into `candidates` of a maximal subset that is independent modulo
// the column span of `span` (all vectors of length dim).  Used to pick
// cohomology representatives: span = image basis, candidates = kernel basis.
std::vector<std::size_t> independent_mod_span(
    const std::vector<std::vector<Rat>>& span,
    const std::vector<std::vector<Rat>>& candidates, std::size_t dim);

}  // namespace klrw

#endif

#ifndef KLRW_HOCHSCHILD_HPP
#define KLRW_HOCHSCHILD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klrw/bimodule.hpp"
#include "klrw/resolution.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Cochains Hom(P_n, M).  A cochain is determined by finitely many rational
// coefficients phi_l(w) against the value basis of M at the endpoints of
// the generator w: the coordinate (w, l) stands for the value
// a(tgt w, src w) * s^l (for the cokernel module the only coordinate is
// l = 0, the class of e(i)).
//
// The internal degree of a coordinate is D = qdeg(w) - qdeg(value); the
// induced differential preserves it, so cohomology splits into finite
// D-slices.
// ---------------------------------------------------------------------------

class Cochain {
 public:
  // The zero cochain of the given degree.
  Cochain(BimoduleModel mod, int degree, QuiverConfig cfg);

  int degree() const { return degree_; }
  const BimoduleModel& module() const { return mod_; }
  const QuiverConfig& config() const { return cfg_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::pair<Ambiguity, int>, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(const Ambiguity& w, int l) const;

  // Sets phi_l(w) += c; throws if the coordinate does not exist in the
  // module (wrong degree, endpoints outside the module, or l out of range).
  void add(const Ambiguity& w, int l, const Rat& c);

  // The value on a generator, as a module element.
  ModElem eval(const Ambiguity& w) const;
  // The value on a resolution element of matching degree; outer factors
  // act through the module structure.
  ModElem eval(const ResolutionElement& x) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rat& c);
  friend bool operator==(const Cochain& x, const Cochain& y) {
    return x.mod_ == y.mod_ && x.degree_ == y.degree_ && x.coeffs_ == y.coeffs_;
  }

 private:
  BimoduleModel mod_;
  int degree_ = 0;
  QuiverConfig cfg_;
  std::map<std::pair<Ambiguity, int>, Rat> coeffs_;
};

// d phi = phi o boundary: evaluates phi on the boundary of every generator
// one degree up, using the module actions.
Cochain induced_d(const Cochain& phi);

// The same differential for the diagonal module through the sixteen
// coefficientwise rules (three at n = 0, four at n = 1, four even and four
// odd at n >= 2, plus phi_{-1} := 0).  Kept separate as the oracle the
// generic computation is tested against.
Cochain induced_d_closed(const Cochain& phi);

// All coordinates (w, l) of internal degree D in Hom(P_n, M), in
// enumeration order of S_n.
std::vector<std::pair<Ambiguity, int>> cochain_coords(const BimoduleModel& M, int n,
                                                      int D, const QuiverConfig& cfg);

// Graded cohomology dimensions dim HH^n in slice D for 0 <= n <= nMax,
// dMin <= D <= dMax: rank computations over the exact rationals on each
// (n, D) coordinate space.
std::map<std::pair<int, int>, int> hh_dims(const BimoduleModel& M, int nMax, int dMin,
                                           int dMax, const QuiverConfig& cfg);

// Explicit cocycles spanning HH^n in slice D.  The diagonal module's
// low-degree slices (and their braiding-module restrictions) return the
// closed-form representatives: the all-ones idempotent cochain and its
// dotted shifts at n = 0, the half-and-half arrow cochain at n = 1, and
// the vertex-supported pattern at (n, D) = (2, 2).  Every other slice
// falls back to kernel-modulo-image representatives from the rank
// computation.  Empty when the slice has no cohomology.
std::vector<Cochain> representatives(const BimoduleModel& M, int n, int D,
                                     const QuiverConfig& cfg);

std::string to_string(const Cochain& phi);

}  // namespace klrw

#endif

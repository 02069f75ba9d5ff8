#ifndef KLRW_NATTRANS_HPP
#define KLRW_NATTRANS_HPP

#include <map>
#include <string>
#include <vector>

#include "klrw/braiding.hpp"
#include "klrw/quiver.hpp"
#include "klrw/rational.hpp"
#include "klrw/twisted.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Natural transformations id => G for G the identity functor or a single
// braiding functor.  In each degree g in {0, 1, 2} the transformations are
// classified by a finite family of rational parameters:
//
//   g = 0: dot polynomials, one coefficient epsilon_l per dot power l
//          (the braided target has no l = 0 term: the identity of the
//          untwisted object cannot map to the cone in degree 0);
//   g = 1: the qdeg-weighted family, one coefficient sigma_l per power;
//   g = 2: the vertex family, one coefficient theta_v per inner vertex,
//          with theta_0 = theta_N = 0 forced (and theta_i = 0 for the
//          braided target at index i).
//
// A transformation is a collection of components eta^d, one per chain
// length d >= 0, with eta^d of cohomological degree g - d; only eta^g and
// eta^{g+1} can be nonzero.  Values are twisted-complex morphisms whose
// source is the plain object of the chain and whose target is the image
// of the braiding functor (a plain object again when the target functor
// is the identity or the index is untwisted).
// ---------------------------------------------------------------------------

struct NatTarget {
  bool braided = false;
  int index = 0;  // braid index, meaningful only when braided

  static NatTarget id() { return NatTarget{false, 0}; }
  static NatTarget beta(int i) { return NatTarget{true, i}; }
  friend auto operator<=>(const NatTarget&, const NatTarget&) = default;
};

struct NatParams {
  int degree = 0;  // g in {0, 1, 2}
  NatTarget target;
  std::map<int, Rat> epsilon;  // degree 0: dot power -> coefficient
  std::map<int, Rat> sigma;    // degree 1: dot power -> coefficient
  std::vector<Rat> theta;      // degree 2: theta[v] for 0 <= v <= N
};

// Throws std::invalid_argument unless the parameter set is well formed for
// the configuration: degree in range, braid index valid when braided, no
// negative dot powers, no epsilon_0 for a braided target, theta of length
// N + 1 with the forced entries zero.
void validate_params(const NatParams& params, const QuiverConfig& cfg);

// A component value together with the chain length it was evaluated at.
// in_support is false when the component is identically zero for degree
// reasons (d outside {g, g+1}, or d = g + 1 with the identity target); the
// value is then the zero morphism of the appropriate shape.
struct NatValue {
  TwMorphism value;
  int arity = 0;
  bool in_support = false;

  // True when source and target are single objects, so the value is a
  // plain algebra element sitting in the only block.
  bool plain() const;
  AlgElem algebra() const;  // the (0, 0) block; requires plain()
};

// The vertex-family coefficient C(a2, a1) of the degree-2 transformations:
// the signed theta-weighted crossing count collected while the middle dots
// of the composite a2 a1 slide to their normal position (turn first, then
// the constant cluster rides to the source).  Zero when a1 is diagonal;
// composites bending toward larger labels count negative.  Throws when the
// pair is not composable.
Rat coeff_C(const Mor& a2, const Mor& a1, const std::vector<Rat>& theta);

// The qdeg-weighted coefficient Q(a2, a1) of the degree-1 braided eta^2:
// supported on pairs passing through or ending at the braid index i, with
// full weight on pairs bending across i and half weight on the boundary
// cases.  Zero when the composite does not reach i.
Rat coeff_Q(int i, const Mor& a2, const Mor& a1);

// The object component eta^0 at T_obj.
NatValue eta0(const NatParams& params, int obj, const QuiverConfig& cfg);

// The component eta^d on a composable chain [a_d, ..., a_1] (leftmost acts
// last), d = chain.size() in 1..4.  Dispatches on the target functor and
// the parameter degree; off-support components come back as shaped zeros.
NatValue eta(const NatParams& params, const std::vector<Mor>& chain,
             const QuiverConfig& cfg);

// The degree-2 braided eta^3 on a triple with tgt(a3) = i, solved from its
// naturality equation: the cone differential composed with eta^3 must equal
//   beta1(a3) . eta2(a2, a1) - eta2(a3, a2) . a1
//     + eta2(a3, a2 a1) - eta2(a3 a2, a1).
// Left composition with the q-arrow out of the cone is injective on basis
// morphisms, so the block is determined from the T_{i-1} summand; the
// T_{i+1} summand is then checked for consistency (std::logic_error on
// failure).  Triples with tgt(a3) != i give zero.
NatValue eta3_solve(int i, const std::vector<Rat>& theta, const Mor& a3,
                    const Mor& a2, const Mor& a1, const QuiverConfig& cfg);

// The curved naturality residual of the full transformation on a chain of
// length 1..4: the structure-map bracket of eta^d plus the functor-side
// compositions against beta^1, beta^2 and the chain contractions.  Zero for
// every chain exactly when the parameter family is a cocycle; returned
// uncollapsed so failures show which blocks obstruct.
TwMorphism verify_cocycle(const NatParams& params, const std::vector<Mor>& chain,
                          const QuiverConfig& cfg);

std::string to_string(const NatValue& v);

}  // namespace klrw

#endif

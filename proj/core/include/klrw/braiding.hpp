#ifndef KLRW_BRAIDING_HPP
#define KLRW_BRAIDING_HPP

#include <vector>

#include "klrw/twisted.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// The negative braiding at strand position i (1 <= i <= N-1), as an
// A_infty endofunctor landing in twisted complexes.  On objects it twists
// T_i into the cone T_i[-1] -> T_{i-1} (+) T_{i+1} and fixes every other
// generator.  On morphisms only the linear part beta1 and the quadratic
// part beta2 are nonzero; beta2 lowers the homological degree by one.
// ---------------------------------------------------------------------------

// The image of T_j.  For j == i the slot order is fixed as
//   0: T_i[-1]   1: T_{i-1}[0]   2: T_{i+1}[0]
// with differential entries q(i-1) into slot 1 and -p(i+1) into slot 2.
TwComplex beta_object(int i, int j, const QuiverConfig& cfg);

// Linear part on a basis morphism a = a(k,j)*s^m, degree 0.
//   j, k != i : the single block a itself.
//   k == i    : one block into the degree-0 summand on the j side,
//               a(i+1,j)*s^m for j > i and a(i-1,j)*s^m for j < i.
//   j == i    : blocks out of both degree-0 summands; the summand on the
//               far side from k picks up one extra dot.
//   j == k == i (a = s_i^m): the diagonal with s^m in all three slots.
TwMorphism beta1(int i, const Mor& a, const QuiverConfig& cfg);

// Quadratic part on a composable pair a2 = a(l,k)*s^b, a1 = a(k,j)*s^a,
// degree -1.  Zero unless l == i.  For j != i it is nonzero exactly when
// the composite bends across position i ((i-j)(i-k) < 0):
//   sgn(i-k) * a(i,j)*s^(b+a+|i-k|-1)  into the T_i[-1] slot.
// For j == i it leaves the degree-0 summand on the k side:
//   sgn(i-k) * a(i,i+sgn(i-k))*s^(b+a+|i-k|-1).
TwMorphism beta2(int i, const Mor& a2, const Mor& a1, const QuiverConfig& cfg);

// Residual of the A_infty functor equation on a composable chain
// [a_d, ..., a_1] listed left to right (chain.front() acts last).
//   d = 1: mu_delta1(beta1(a))
//   d = 2: mu_delta1(beta2(a2,a1)) + mu_delta2(beta1(a2), beta1(a1))
//          - beta1(a2 a1)
//   d = 3: mu_delta2(beta2(a3,a2), beta1(a1)) + mu_delta2(beta1(a3),
//          beta2(a2,a1)) - beta2(a3, a2 a1) + beta2(a3 a2, a1)
// Zero on every composable chain.
TwMorphism verify_functor(int i, const std::vector<Mor>& chain, const QuiverConfig& cfg);

// Internal-degree charge of slot k within a beta_object output: 2 for
// T_i[-1], 1 for the degree-0 summands of the cone, 0 for a plain
// generator.  Every block B of beta1 satisfies
//   qdeg(B) + charge(target slot) - charge(source slot) = qdeg(input)
// and every block of beta2 satisfies the same with the inputs' total.
int slot_charge(const TwComplex& c, int k);

}  // namespace klrw

#endif

#ifndef KLRW_RESOLUTION_HPP
#define KLRW_RESOLUTION_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrw/algebra.hpp"
#include "klrw/ambiguity.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// The bimodule resolution ... -> P_n -> ... -> P_1 -> P_0 -> A -> 0 with
// P_n the free bimodule on S_n.  Elements are rational combinations of
// tensors left (x) gen (x) right; the outer factors are normal forms and
// the differential acts by splitting the generator's word.
// ---------------------------------------------------------------------------

// One basis tensor of P_n.  Endpoints chain right to left:
// src(left) = tgt(gen) and tgt(right) = src(gen), so the composite word
// left . word(gen) . right is composable.
struct ResTerm {
  Mor left;
  Ambiguity gen;
  Mor right;

  friend auto operator<=>(const ResTerm&, const ResTerm&) = default;
};

int qdeg(const ResTerm& t);

// Rational combination of ResTerms of one homological degree.  add()
// validates the endpoint chain and degree homogeneity and drops zeros.
class ResolutionElement {
 public:
  ResolutionElement() = default;

  static ResolutionElement zero() { return ResolutionElement(); }

  bool is_zero() const { return terms_.empty(); }
  // Homological degree of the terms; -1 for the zero element.
  int degree() const;
  const std::map<ResTerm, Rat>& terms() const { return terms_; }
  Rat coeff(const ResTerm& t) const;

  void add(const Mor& left, const Ambiguity& gen, const Mor& right, const Rat& c);
  void add(const ResTerm& t, const Rat& c);

  ResolutionElement& operator+=(const ResolutionElement& o);
  ResolutionElement& operator-=(const ResolutionElement& o);
  ResolutionElement& operator*=(const Rat& c);

  friend ResolutionElement operator+(ResolutionElement x, const ResolutionElement& y) { return x += y; }
  friend ResolutionElement operator-(ResolutionElement x, const ResolutionElement& y) { return x -= y; }
  friend ResolutionElement operator*(const Rat& c, ResolutionElement x) { return x *= c; }

  friend bool operator==(const ResolutionElement&, const ResolutionElement&) = default;

 private:
  std::map<ResTerm, Rat> terms_;
};

// Outer bimodule action x.z.y = sum of pi(x*left) (x) gen (x) pi(right*y);
// term pairs with mismatched endpoints contribute zero.
ResolutionElement act(const AlgElem& x, const ResolutionElement& z, const AlgElem& y);
ResolutionElement left_act(const AlgElem& x, const ResolutionElement& z);
ResolutionElement right_act(const ResolutionElement& z, const AlgElem& y);

// Sum of pi(u) (x) r (x) pi(v) over every decomposition p = u.r.v with
// r in S_n.  Every member of S_n (n >= 1) is a window of exactly n
// letters; for n = 0 each of the length+1 cut points contributes the
// idempotent at its chamber.
ResolutionElement split(int n, const Path& p);

// The single decomposition through the leftmost / rightmost subpath lying
// in S_level (level 2, the rule left-hand sides, by default).  Throws
// std::domain_error("no reducible subpath") if p has no such subword.
ResolutionElement split_L(const Path& p, int level = 2);
ResolutionElement split_R(const Path& p, int level = 2);

// If the fixed-size letter window [from, from+n) of p is the word of an
// S_n generator, return it.  n >= 1.
std::optional<Ambiguity> match_S(int n, const Path& p, int from);

// The differential on generators, as closed forms:
//   n = 1: 1 (x) w (x) 1 |-> e (x) e_t (x) w  -  w (x) e_s (x) e
//   n >= 2: three terms (plain families) or four (dotted families), with
//   signs alternating between even and odd n; the P and Q families are
//   mirror images under p <-> q, i <-> i+1.
// boundary(n, x) extends bimodule-linearly via mu2.  Degree 0 is the
// augmentation x (x) e (x) y |-> pi(xy), which lands in the algebra, so it
// is a separate function.
ResolutionElement boundary_gen(int n, const Ambiguity& gen);
ResolutionElement boundary(int n, const ResolutionElement& x);
AlgElem augment(const ResolutionElement& x);

// The same differential computed by the generic recursion
//   par_n = (id - rho_{n-2} par_{n-1}) delta_n
// with delta the split-based comparison maps and rho the contracting
// homotopy series built from gamma_k(x (x) w (x) y) =
// (-1)^{k+1} split_{k+1}(x.w).y.  Independent of the closed forms above;
// the two must agree on every generator.
ResolutionElement boundary_recursive(int n, const Ambiguity& gen);

// The comparison maps themselves, exposed for the recursion tests.
// delta_map(n, x) for n >= 1; delta_map(0, .) is augment.
ResolutionElement delta_map(int n, const ResolutionElement& x);
ResolutionElement gamma_map(int k, const ResolutionElement& x);  // k >= 0
ResolutionElement gamma_base(const AlgElem& x);                  // k = -1

// ---------------------------------------------------------------------------
// Slice-wise exactness.  The differential preserves the outer endpoints
// (t, s) and the total internal degree q, and each such slice of P_n is
// finite-dimensional, so exactness is a finite rank computation per slice.
// ---------------------------------------------------------------------------

struct SliceKey {
  int tgt = 0;
  int src = 0;
  int q = 0;
  friend auto operator<=>(const SliceKey&, const SliceKey&) = default;
};

// Basis of the (tgt, src, q)-slice of P_n, in a fixed order.
std::vector<ResTerm> slice_basis(int n, const SliceKey& key, const QuiverConfig& cfg);

struct ExactnessRow {
  SliceKey slice;
  int degree = 0;       // homological degree n
  int dim = 0;          // dim of the P_n slice
  int rank_kernel = 0;  // dim ker of the outgoing differential
  int rank_image = 0;   // rank of the incoming differential from P_{n+1}
  bool exact = false;
};

struct ExactnessReport {
  bool all_exact = true;
  std::vector<ExactnessRow> rows;
};

// Checks H_n = 0 for 1 <= n <= maxN-1 on every slice with q <= maxQ, and
// at degree 0 that the augmentation maps the slice of P_0 onto the
// matching slice of the algebra with kernel equal to the image of the
// degree-1 differential.  Empty slices are skipped.
ExactnessReport check_exactness(const QuiverConfig& cfg, int maxN, int maxQ);

std::string to_string(const ResTerm& t);
std::string to_string(const ResolutionElement& x);

}  // namespace klrw

#endif

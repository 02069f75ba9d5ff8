#ifndef KLRW_ALGEBRA_HPP
#define KLRW_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klrw/quiver.hpp"
#include "klrw/rational.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Letters, words, normal forms.
//
// The black strand moves between chambers 0..N.  Three kinds of letters:
//   P(i): chamber i-1 -> i   (strand steps up past puncture i),   i >= 1
//   Q(i): chamber i+1 -> i   (strand steps down past puncture i), i <= N-1
//   S(i): chamber i   -> i   (a dot on the strand sitting in chamber i)
//
// Words are stored left to right but composed right to left: in the word
// [l0, l1, ..., lm] the rightmost letter lm acts first, so consecutive
// letters must satisfy source(l_t) = target(l_{t+1}).  The word's target is
// the target of its leftmost letter, its source the source of the rightmost.
//
// The defining relations are oriented into a reduction system:
//   Q(i) P(i+1)  ->  S(i)            (down-up collapses to a dot)
//   P(i) Q(i-1)  ->  S(i)            (up-down collapses to a dot)
//   S(i) P(i)    ->  P(i) S(i-1)     (dots slide toward the source)
//   S(i) Q(i)    ->  Q(i) S(i+1)
// Every word reduces to a unique normal form: a monotone run of P's or Q's
// followed by all dots at the source end.  Normal forms are the basis
// morphisms a(j,i)*s^k below.
// ---------------------------------------------------------------------------

enum class ArrowKind : std::uint8_t { P, Q, S };

struct Arrow {
  ArrowKind kind;
  int idx;

  int target() const { return idx; }
  int source() const {
    switch (kind) {
      case ArrowKind::P: return idx - 1;
      case ArrowKind::Q: return idx + 1;
      default: return idx;
    }
  }

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline Arrow P(int i) { return {ArrowKind::P, i}; }
inline Arrow Q(int i) { return {ArrowKind::Q, i}; }
inline Arrow S(int i) { return {ArrowKind::S, i}; }

// A composable word, possibly empty.  An empty word is an idempotent and
// remembers which chamber it sits at.
class Path {
 public:
  // Empty path (idempotent) at chamber v.
  static Path vertex(int v);
  // Nonempty path from letters; throws if consecutive letters do not compose.
  static Path word(std::vector<Arrow> letters);

  int target() const { return letters_.empty() ? at_ : letters_.front().target(); }
  int source() const { return letters_.empty() ? at_ : letters_.back().source(); }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Arrow>& letters() const { return letters_; }

  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  Path(int at, std::vector<Arrow> letters) : at_(at), letters_(std::move(letters)) {}
  int at_ = 0;                  // chamber, meaningful only when letters_ is empty
  std::vector<Arrow> letters_;  // leftmost letter acts last
};

// Composition u*v (v acts first); requires source(u) = target(v).
Path concat(const Path& u, const Path& v);

// A basis morphism in normal form: a(j,i)*s^dots goes from chamber i to
// chamber j with `dots` dots at the source end.  a(i,i)*s^0 is the
// idempotent e(i); a(i,i)*s^1 is the dotted strand s(i); a(i+1,i) is p(i+1)
// and a(i,i+1) is q(i).
struct Mor {
  int tgt = 0;
  int src = 0;
  int dots = 0;

  bool is_idempotent() const { return tgt == src && dots == 0; }

  friend auto operator<=>(const Mor&, const Mor&) = default;
};

inline Mor e(int i) { return {i, i, 0}; }
inline Mor s(int i) { return {i, i, 1}; }
inline Mor p(int i) { return {i, i - 1, 0}; }
inline Mor q(int i) { return {i, i + 1, 0}; }
inline Mor a(int j, int i, int dots = 0) { return {j, i, dots}; }

// The word of a normal form: monotone strand run, then dots.
Path path_of(const Mor& m);

// Dot-correction exponent of the closed-form product: composing
// i -> j -> k costs min(|i-j|,|j-k|) extra dots when the strand reverses
// direction at j, none otherwise.
int delta_ijk(int i, int j, int k);

// Closed-form product of basis morphisms (b after a); requires
// b.src == a.tgt.  mu2(b, a) = a(b.tgt, a.src) * s^(b.dots+a.dots+delta).
Mor mu2(const Mor& b, const Mor& a);

// Internal grading: qdeg(a(j,i)*s^k) = 2k + |i-j|.  Letters weigh 1 (P, Q)
// and 2 (S); the grading is additive under composition and preserved by
// reduction.
int qdeg(const Mor& m);
int qdeg(const Path& p);

// Rewrites p to its unique normal form (leftmost redex first).
Mor reduce(const Path& p);

// All results of applying one reduction step anywhere in p.  Empty iff p is
// already a normal-form word.  Used by the confluence oracle and by
// reachability searches over the rewriting order.
std::vector<Path> one_step_reductions(const Path& p);

// Number of out-and-back turns of the strand: direction reversals in the
// chamber walk, ignoring dots.  Zero exactly on normal forms.
int turning_number(const Path& p);

// Every word reachable from p by zero or more reduction steps, including p
// itself, in a deterministic order.  The rewriting order is well-founded,
// so this set is finite.
std::vector<Path> reachable_words(const Path& p);

// ---------------------------------------------------------------------------
// Rational linear combinations of basis morphisms.  Keys are kept sorted and
// zero coefficients are never stored, so equality is structural.
// ---------------------------------------------------------------------------
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(const Mor& m) : terms_{{m, Rat(1)}} {}
  AlgElem(const Mor& m, const Rat& c);

  static AlgElem zero() { return AlgElem(); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mor, Rat>& terms() const { return terms_; }
  Rat coeff(const Mor& m) const;

  void add(const Mor& m, const Rat& c);
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Rat& c);

  friend AlgElem operator+(AlgElem x, const AlgElem& y) { return x += y; }
  friend AlgElem operator-(AlgElem x, const AlgElem& y) { return x -= y; }
  friend AlgElem operator*(const Rat& c, AlgElem x) { return x *= c; }

  friend bool operator==(const AlgElem&, const AlgElem&) = default;

 private:
  std::map<Mor, Rat> terms_;
};

// Bilinear extension of the basis product.  Term pairs with mismatched
// endpoints multiply to zero (the full algebra sums over all endpoint
// pairs), unlike the basis-level mu2 which treats a mismatch as an error.
AlgElem mu2(const AlgElem& b, const AlgElem& a);

// Canonical text forms in the CLI grammar: e(i), p(i), q(i), s(i),
// a(j,i)*s^k.  parse round-trips these exactly.
std::string to_string(const Mor& m);
std::string to_string(const AlgElem& x);
std::string to_string(const Path& p);

}  // namespace klrw

#endif

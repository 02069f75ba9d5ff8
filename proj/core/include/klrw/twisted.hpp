#ifndef KLRW_TWISTED_HPP
#define KLRW_TWISTED_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klrw/algebra.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Twisted complexes over the strand category: formal direct sums of shifted
// generators T_j with a bounding differential delta of homological degree +1
// squaring to zero under plain composition.  Since all Hom spaces sit in
// cohomological degree 0, a twisted complex here is an ordinary chain
// complex of generators, and the only structure maps are mu_delta1 and
// mu_delta2.
// ---------------------------------------------------------------------------

// One summand: generator T_object placed in homological degree `degree`.
struct Slot {
  int object = 0;
  int degree = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

// A complex is a fixed list of slots plus differential entries between
// slots one degree apart.  Entries are stored sparsely; set_delta validates
// endpoints and the degree step.
class TwComplex {
 public:
  TwComplex() = default;
  explicit TwComplex(std::vector<Slot> slots);

  // The one-slot complex T_j in degree 0.
  static TwComplex single(int object);

  int size() const { return static_cast<int>(slots_.size()); }
  const Slot& slot(int k) const;
  const std::vector<Slot>& slots() const { return slots_; }

  // Differential component from slots()[from] into slots()[to]; the zero
  // element when no entry is stored.
  AlgElem delta(int to, int from) const;
  void set_delta(int to, int from, const AlgElem& value);
  const std::map<std::pair<int, int>, AlgElem>& delta_entries() const { return delta_; }

  bool delta_squares_to_zero() const;

  friend bool operator==(const TwComplex&, const TwComplex&) = default;

 private:
  std::vector<Slot> slots_;
  // keyed (to, from); zero entries are never stored
  std::map<std::pair<int, int>, AlgElem> delta_;
};

// A block matrix between twisted complexes, homogeneous of cohomological
// degree g: the block (to, from) maps source slot `from` sitting in degree d
// into target slot `to` sitting in degree d + g.  add_block validates the
// degree step and the strand endpoints of every term.
class TwMorphism {
 public:
  TwMorphism(TwComplex source, TwComplex target, int degree);

  const TwComplex& source() const { return source_; }
  const TwComplex& target() const { return target_; }
  int degree() const { return degree_; }

  AlgElem block(int to, int from) const;
  void add_block(int to, int from, const AlgElem& value);
  const std::map<std::pair<int, int>, AlgElem>& blocks() const { return blocks_; }

  bool is_zero() const { return blocks_.empty(); }

  // Shape (source, target, degree) must agree.
  TwMorphism& operator+=(const TwMorphism& o);
  TwMorphism& operator-=(const TwMorphism& o);
  TwMorphism& operator*=(const Rat& c);

  friend TwMorphism operator+(TwMorphism x, const TwMorphism& y) { return x += y; }
  friend TwMorphism operator-(TwMorphism x, const TwMorphism& y) { return x -= y; }
  friend TwMorphism operator*(const Rat& c, TwMorphism x) { return x *= c; }

  friend bool operator==(const TwMorphism&, const TwMorphism&) = default;

 private:
  TwComplex source_;
  TwComplex target_;
  int degree_ = 0;
  // keyed (to, from); zero blocks are never stored
  std::map<std::pair<int, int>, AlgElem> blocks_;
};

TwMorphism zero_morphism(const TwComplex& source, const TwComplex& target, int degree);
TwMorphism identity_morphism(const TwComplex& c);

// Plain blockwise composition f2 after f1; requires f1.target() ==
// f2.source().  Degrees add.  No signs: those live in mu_delta2.
TwMorphism compose(const TwMorphism& f2, const TwMorphism& f1);

// The twisted structure maps.  With |a| the degree of the morphism,
//   mu_delta1(a)      = (-1)^|a| delta . a  -  a . delta
//   mu_delta2(a2, a1) = (-1)^|a1| a2 . a1
// and every higher mu_delta vanishes.  mu_delta1 raises the degree by one
// and squares to zero whenever both deltas do.
TwMorphism mu_delta1(const TwMorphism& f);
TwMorphism mu_delta2(const TwMorphism& f2, const TwMorphism& f1);

std::string to_string(const Slot& s);
std::string to_string(const TwComplex& c);
std::string to_string(const TwMorphism& f);

}  // namespace klrw

#endif

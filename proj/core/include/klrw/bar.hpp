#ifndef KLRW_BAR_HPP
#define KLRW_BAR_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "klrw/algebra.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// The normalized bar resolution.  A degree-n basis tensor is
// a (x) [y_n | ... | y_1] (x) b with composable normal forms, the middle
// entries forbidden to be idempotents (that is the normalization).  As
// everywhere, the rightmost factor acts first.
// ---------------------------------------------------------------------------

struct BarTerm {
  Mor a;                    // leftmost outer factor
  std::vector<Mor> middle;  // y_n .. y_1, leftmost entry acts last
  Mor b;                    // rightmost outer factor

  friend auto operator<=>(const BarTerm&, const BarTerm&) = default;
};

// Rational combination of BarTerms of one degree (= middle length).  add()
// validates the endpoint chain, rejects idempotent middle entries, and
// drops zeros.
class BarElement {
 public:
  BarElement() = default;

  static BarElement zero() { return BarElement(); }

  bool is_zero() const { return terms_.empty(); }
  // Degree of the terms; -1 for the zero element.
  int degree() const;
  const std::map<BarTerm, Rat>& terms() const { return terms_; }
  Rat coeff(const BarTerm& t) const;

  void add(const Mor& a, std::vector<Mor> middle, const Mor& b, const Rat& c);
  void add(const BarTerm& t, const Rat& c);

  BarElement& operator+=(const BarElement& o);
  BarElement& operator-=(const BarElement& o);
  BarElement& operator*=(const Rat& c);

  friend BarElement operator+(BarElement x, const BarElement& y) { return x += y; }
  friend BarElement operator-(BarElement x, const BarElement& y) { return x -= y; }
  friend BarElement operator*(const Rat& c, BarElement x) { return x *= c; }

  friend bool operator==(const BarElement&, const BarElement&) = default;

 private:
  std::map<BarTerm, Rat> terms_;
};

// The bar differential: contract each adjacent pair with alternating signs,
//   + a (x) [y_n | .. | y_2] (x) (y_1 b)
//   + sum_i (-1)^i a (x) [.. | y_{i+1} y_i | ..] (x) b
//   + (-1)^n (a y_n) (x) [y_{n-1} | .. ] (x) b,
// dropping any term whose contracted middle entry became an idempotent.
// Requires degree >= 1.
BarElement bar_boundary(const BarElement& x);

std::string to_string(const BarTerm& t);
std::string to_string(const BarElement& x);

}  // namespace klrw

#endif

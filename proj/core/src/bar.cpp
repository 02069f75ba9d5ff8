#include "klrw/bar.hpp"

#include <stdexcept>

namespace klrw {

int BarElement::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.middle.size());
}

Rat BarElement::coeff(const BarTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rat(0) : it->second;
}

void BarElement::add(const Mor& a, std::vector<Mor> middle, const Mor& b, const Rat& c) {
  add(BarTerm{a, std::move(middle), b}, c);
}

void BarElement::add(const BarTerm& t, const Rat& c) {
  if (c == 0) return;
  int expect = t.a.src;
  for (const Mor& y : t.middle) {
    if (y.is_idempotent())
      throw std::invalid_argument("BarElement: idempotent middle entry");
    if (y.tgt != expect)
      throw std::invalid_argument("BarElement: middle entries do not compose");
    expect = y.src;
  }
  if (t.b.tgt != expect)
    throw std::invalid_argument("BarElement: outer factors do not compose");
  if (!terms_.empty() &&
      terms_.begin()->first.middle.size() != t.middle.size())
    throw std::invalid_argument("BarElement: mixed degrees");
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BarElement& BarElement::operator+=(const BarElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

BarElement& BarElement::operator-=(const BarElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

BarElement& BarElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

BarElement bar_boundary(const BarElement& x) {
  if (x.degree() < 1)
    throw std::invalid_argument("bar_boundary: need degree >= 1");
  BarElement out;
  for (const auto& [t, c] : x.terms()) {
    const int n = static_cast<int>(t.middle.size());
    // middle[0] = y_n, ..., middle[n-1] = y_1.
    // Contract y_1 into b: sign +.
    {
      std::vector<Mor> mid(t.middle.begin(), t.middle.end() - 1);
      out.add(t.a, std::move(mid), mu2(t.middle.back(), t.b), c);
    }
    // Contract y_{i+1} y_i for i = 1 .. n-1: sign (-1)^i; the product sits
    // at middle index n-1-i and the entry behind it disappears.  Terms
    // whose product is an idempotent are dropped (normalized complex).
    for (int i = 1; i <= n - 1; ++i) {
      const int k = n - 1 - i;
      Mor prod = mu2(t.middle[k], t.middle[k + 1]);
      if (prod.is_idempotent()) continue;
      std::vector<Mor> mid;
      mid.reserve(n - 1);
      mid.insert(mid.end(), t.middle.begin(), t.middle.begin() + k);
      mid.push_back(prod);
      mid.insert(mid.end(), t.middle.begin() + k + 2, t.middle.end());
      out.add(t.a, std::move(mid), t.b, (i % 2 == 0) ? c : -c);
    }
    // Contract a y_n: sign (-1)^n.
    {
      std::vector<Mor> mid(t.middle.begin() + 1, t.middle.end());
      out.add(mu2(t.a, t.middle.front()), std::move(mid), t.b,
              (n % 2 == 0) ? c : -c);
    }
  }
  return out;
}

std::string to_string(const BarTerm& t) {
  std::string s = to_string(t.a) + " (x) [";
  for (std::size_t k = 0; k < t.middle.size(); ++k) {
    if (k) s += " | ";
    s += to_string(t.middle[k]);
  }
  s += "] (x) " + to_string(t.b);
  return s;
}

std::string to_string(const BarElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    const Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (ac != 1) s += ac.str() + "*";
    s += to_string(t);
  }
  return s;
}

}  // namespace klrw

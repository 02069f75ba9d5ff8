#include "klrw/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klrw {

Path Path::vertex(int v) { return Path(v, {}); }

Path Path::word(std::vector<Arrow> letters) {
  if (letters.empty())
    throw std::invalid_argument("Path::word: empty letter list has no endpoints; use Path::vertex");
  for (std::size_t t = 0; t + 1 < letters.size(); ++t)
    if (letters[t].source() != letters[t + 1].target())
      throw std::invalid_argument("Path::word: letters do not compose at position " + std::to_string(t));
  const int tgt = letters.front().target();
  return Path(tgt, std::move(letters));
}

Path concat(const Path& u, const Path& v) {
  if (u.source() != v.target())
    throw std::invalid_argument("concat: source/target mismatch");
  if (u.empty()) return v;
  if (v.empty()) return u;
  std::vector<Arrow> w = u.letters();
  w.insert(w.end(), v.letters().begin(), v.letters().end());
  return Path::word(std::move(w));
}

Path path_of(const Mor& m) {
  std::vector<Arrow> w;
  if (m.tgt > m.src) {
    for (int t = m.tgt; t > m.src; --t) w.push_back(P(t));
  } else if (m.tgt < m.src) {
    for (int t = m.tgt; t < m.src; ++t) w.push_back(Q(t));
  }
  for (int k = 0; k < m.dots; ++k) w.push_back(S(m.src));
  if (w.empty()) return Path::vertex(m.src);
  return Path::word(std::move(w));
}

int delta_ijk(int i, int j, int k) {
  if ((i - j) * (j - k) >= 0) return 0;
  return std::min(std::abs(i - j), std::abs(j - k));
}

Mor mu2(const Mor& b, const Mor& a) {
  if (b.src != a.tgt)
    throw std::invalid_argument("mu2: cannot compose " + to_string(b) + " after " + to_string(a));
  return Mor{b.tgt, a.src, b.dots + a.dots + delta_ijk(a.src, a.tgt, b.tgt)};
}

int qdeg(const Mor& m) { return 2 * m.dots + std::abs(m.tgt - m.src); }

int qdeg(const Path& p) {
  int d = 0;
  for (const Arrow& l : p.letters()) d += (l.kind == ArrowKind::S) ? 2 : 1;
  return d;
}

namespace {

// A redex is an adjacent pair (w[t], w[t+1]); returns the replacement
// letters (length 1 or 2) if the pair matches a rule.
bool match_rule(const Arrow& x, const Arrow& y, std::vector<Arrow>& out) {
  if (x.kind == ArrowKind::Q && y.kind == ArrowKind::P && y.idx == x.idx + 1) {
    out = {S(x.idx)};
    return true;
  }
  if (x.kind == ArrowKind::P && y.kind == ArrowKind::Q && y.idx == x.idx - 1) {
    out = {S(x.idx)};
    return true;
  }
  if (x.kind == ArrowKind::S && y.kind == ArrowKind::P && y.idx == x.idx) {
    out = {P(x.idx), S(x.idx - 1)};
    return true;
  }
  if (x.kind == ArrowKind::S && y.kind == ArrowKind::Q && y.idx == x.idx) {
    out = {Q(x.idx), S(x.idx + 1)};
    return true;
  }
  return false;
}

std::vector<Arrow> apply_rule_at(const std::vector<Arrow>& w, std::size_t t,
                                 const std::vector<Arrow>& repl) {
  std::vector<Arrow> r;
  r.reserve(w.size());
  r.insert(r.end(), w.begin(), w.begin() + t);
  r.insert(r.end(), repl.begin(), repl.end());
  r.insert(r.end(), w.begin() + t + 2, w.end());
  return r;
}

}  // namespace

Mor reduce(const Path& p) {
  std::vector<Arrow> w = p.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Arrow> repl;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      if (match_rule(w[t], w[t + 1], repl)) {
        w = apply_rule_at(w, t, repl);
        changed = true;
        break;
      }
    }
  }
  // Read off the normal form: strand letters, then dots.
  int dots = 0;
  std::size_t m = w.size();
  while (m > 0 && w[m - 1].kind == ArrowKind::S) {
    ++dots;
    --m;
  }
  for (std::size_t t = 0; t + 1 < m; ++t)
    if (w[t].kind == ArrowKind::S || w[t].kind != w[t + 1].kind)
      throw std::logic_error("reduce: irreducible word is not a monotone run");
  return Mor{p.target(), p.source(), dots};
}

std::vector<Path> one_step_reductions(const Path& p) {
  std::vector<Path> out;
  const std::vector<Arrow>& w = p.letters();
  std::vector<Arrow> repl;
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    if (match_rule(w[t], w[t + 1], repl)) {
      std::vector<Arrow> r = apply_rule_at(w, t, repl);
      out.push_back(r.empty() ? Path::vertex(p.target()) : Path::word(std::move(r)));
    }
  }
  return out;
}

std::vector<Path> reachable_words(const Path& p) {
  std::set<Path> seen{p};
  std::vector<Path> queue{p};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Path cur = queue[head];
    for (const Path& next : one_step_reductions(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return {seen.begin(), seen.end()};
}

int turning_number(const Path& p) {
  int turns = 0;
  int prev = 0;  // +1 for an upward move, -1 downward, 0 before the first move
  // Letters act right to left, so walk the word from the back.
  const std::vector<Arrow>& w = p.letters();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int dir = 0;
    if (it->kind == ArrowKind::P) dir = 1;
    else if (it->kind == ArrowKind::Q) dir = -1;
    else continue;  // dots do not move the strand
    if (prev != 0 && dir != prev) ++turns;
    prev = dir;
  }
  return turns;
}

AlgElem::AlgElem(const Mor& m, const Rat& c) {
  if (c != 0) terms_[m] = c;
}

Rat AlgElem::coeff(const Mor& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void AlgElem::add(const Mor& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

AlgElem& AlgElem::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

AlgElem mu2(const AlgElem& b, const AlgElem& a) {
  // In the full algebra (direct sum over all endpoint pairs) composing
  // basis elements with mismatched endpoints gives zero, not an error.
  AlgElem r;
  for (const auto& [mb, cb] : b.terms())
    for (const auto& [ma, ca] : a.terms())
      if (mb.src == ma.tgt) r.add(mu2(mb, ma), cb * ca);
  return r;
}

std::string to_string(const Mor& m) {
  std::ostringstream os;
  if (m.tgt == m.src && m.dots == 0) {
    os << "e(" << m.src << ")";
  } else if (m.tgt == m.src && m.dots == 1) {
    os << "s(" << m.src << ")";
  } else if (m.tgt == m.src + 1 && m.dots == 0) {
    os << "p(" << m.tgt << ")";
  } else if (m.tgt == m.src - 1 && m.dots == 0) {
    os << "q(" << m.tgt << ")";
  } else {
    os << "a(" << m.tgt << "," << m.src << ")";
    if (m.dots > 0) os << "*s^" << m.dots;
  }
  return os.str();
}

std::string to_string(const AlgElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (ac != 1) os << ac.str() << "*";
    os << to_string(m);
    first = false;
  }
  return os.str();
}

std::string to_string(const Path& p) {
  if (p.empty()) return "e(" + std::to_string(p.target()) + ")";
  std::ostringstream os;
  bool first = true;
  for (const Arrow& l : p.letters()) {
    if (!first) os << ".";
    switch (l.kind) {
      case ArrowKind::P: os << "p(" << l.idx << ")"; break;
      case ArrowKind::Q: os << "q(" << l.idx << ")"; break;
      case ArrowKind::S: os << "s(" << l.idx << ")"; break;
    }
    first = false;
  }
  return os.str();
}

}  // namespace klrw

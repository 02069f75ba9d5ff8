#ifndef KLRW_TESTS_HELPERS_HPP
#define KLRW_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "klrw/algebra.hpp"
#include "klrw/bar.hpp"

namespace klrw::testing {

// The single letter as a basis morphism.
inline Mor mor_of(const Arrow& l) {
  switch (l.kind) {
    case ArrowKind::P: return p(l.idx);
    case ArrowKind::Q: return q(l.idx);
    default: return s(l.idx);
  }
}

// Fold a word through the closed-form product, left to right (the result
// of the leftmost letter acting after all the others).
inline Mor fold_mu2(const Path& w) {
  Mor acc = e(w.target());
  for (const Arrow& l : w.letters()) acc = mu2(acc, mor_of(l));
  return acc;
}

// Letters valid in the quiver on |x| punctures whose target is chamber c.
inline std::vector<Arrow> letters_into(int c, const QuiverConfig& cfg) {
  std::vector<Arrow> out;
  if (c >= 1) out.push_back(P(c));
  if (c <= cfg.punctures - 1) out.push_back(Q(c));
  out.push_back(S(c));
  return out;
}

// Every composable word of length <= maxLen, including the empty words at
// each chamber.  Extended on the right: the appended letter acts first, so
// its target must equal the current source.
inline std::vector<Path> all_words(const QuiverConfig& cfg, int maxLen) {
  std::vector<Path> out;
  std::vector<std::vector<Arrow>> frontier;
  for (int c = 0; c <= cfg.punctures; ++c) out.push_back(Path::vertex(c));
  for (int c = 0; c <= cfg.punctures; ++c)
    for (const Arrow& l : letters_into(c, cfg)) frontier.push_back({l});
  for (int len = 1; len <= maxLen; ++len) {
    std::vector<std::vector<Arrow>> next;
    for (const std::vector<Arrow>& w : frontier) {
      out.push_back(Path::word(w));
      if (len == maxLen) continue;
      for (const Arrow& l : letters_into(w.back().source(), cfg)) {
        std::vector<Arrow> ext = w;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// A random degree-n bar tensor: a chain of n+2 composable normal forms
// through uniformly chosen chambers, middle entries forced off the
// idempotents by adding a dot when needed.
inline BarTerm random_bar_term(std::mt19937& rng, const QuiverConfig& cfg, int n,
                               int maxDots) {
  std::uniform_int_distribution<int> vtx(0, cfg.max_object());
  std::uniform_int_distribution<int> dot(0, maxDots);
  std::vector<int> v(n + 3);
  for (int& x : v) x = vtx(rng);
  auto mk = [&](int tgt, int src, bool inner) {
    int d = dot(rng);
    if (inner && tgt == src && d == 0) d = 1;
    return a(tgt, src, d);
  };
  std::vector<Mor> mid(n);
  for (int k = 1; k <= n; ++k) mid[n - k] = mk(v[k + 1], v[k], true);
  return {mk(v[n + 2], v[n + 1], false), std::move(mid), mk(v[1], v[0], false)};
}

}  // namespace klrw::testing

#endif

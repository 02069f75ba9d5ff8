#include "klrw/resolution.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "klrw/matrix.hpp"

namespace klrw {

namespace {

// Letters [from, to) of p as a path; an empty range is the idempotent at
// the chamber of that cut.
Path subword(const Path& p, int from, int to) {
  const std::vector<Arrow>& w = p.letters();
  if (from == to) {
    int at = (to < static_cast<int>(w.size())) ? w[to].target() : p.source();
    return Path::vertex(at);
  }
  return Path::word(std::vector<Arrow>(w.begin() + from, w.begin() + to));
}

}  // namespace

int qdeg(const ResTerm& t) {
  return qdeg(t.left) + t.gen.qdeg() + qdeg(t.right);
}

int ResolutionElement::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.gen.n();
}

Rat ResolutionElement::coeff(const ResTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ResolutionElement::add(const ResTerm& t, const Rat& c) {
  if (c == 0) return;
  if (t.left.src != t.gen.tgt() || t.right.tgt != t.gen.src())
    throw std::invalid_argument("ResolutionElement::add: endpoint mismatch in " + to_string(t));
  if (!terms_.empty() && terms_.begin()->first.gen.n() != t.gen.n())
    throw std::invalid_argument("ResolutionElement::add: mixed homological degrees");
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ResolutionElement::add(const Mor& left, const Ambiguity& gen, const Mor& right,
                            const Rat& c) {
  add(ResTerm{left, gen, right}, c);
}

ResolutionElement& ResolutionElement::operator+=(const ResolutionElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

ResolutionElement& ResolutionElement::operator-=(const ResolutionElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

ResolutionElement& ResolutionElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

ResolutionElement left_act(const AlgElem& x, const ResolutionElement& z) {
  ResolutionElement out;
  for (const auto& [t, c] : z.terms())
    for (const auto& [m, cm] : x.terms())
      if (m.src == t.left.tgt) out.add(mu2(m, t.left), t.gen, t.right, c * cm);
  return out;
}

ResolutionElement right_act(const ResolutionElement& z, const AlgElem& y) {
  ResolutionElement out;
  for (const auto& [t, c] : z.terms())
    for (const auto& [m, cm] : y.terms())
      if (t.right.src == m.tgt) out.add(t.left, t.gen, mu2(t.right, m), c * cm);
  return out;
}

ResolutionElement act(const AlgElem& x, const ResolutionElement& z, const AlgElem& y) {
  return right_act(left_act(x, z), y);
}

std::optional<Ambiguity> match_S(int n, const Path& p, int from) {
  const std::vector<Arrow>& w = p.letters();
  if (n < 1 || from < 0 || from + n > static_cast<int>(w.size())) return std::nullopt;
  const Arrow& head = w[from];
  if (n == 1) {
    switch (head.kind) {
      case ArrowKind::P: return Ambiguity::family(1, Fam::P, head.idx - 1, false);
      case ArrowKind::Q: return Ambiguity::family(1, Fam::Q, head.idx, false);
      case ArrowKind::S: return Ambiguity::family(1, Fam::Q, head.idx, true);
    }
    return std::nullopt;
  }
  // For n >= 2 the first letter (and for dotted words the second) pins down
  // the candidate family; compare its word against the window.
  Fam fam;
  int base;
  bool dotted;
  if (head.kind == ArrowKind::S) {
    dotted = true;
    const Arrow& second = w[from + 1];
    if (second.kind == ArrowKind::P && second.idx == head.idx) {
      fam = Fam::P;
      base = head.idx - 1;
    } else if (second.kind == ArrowKind::Q && second.idx == head.idx) {
      fam = Fam::Q;
      base = head.idx;
    } else {
      return std::nullopt;
    }
  } else {
    dotted = false;
    fam = (head.kind == ArrowKind::P) ? Fam::P : Fam::Q;
    base = (head.kind == ArrowKind::P) ? head.idx - 1 : head.idx;
  }
  Ambiguity cand = Ambiguity::family(n, fam, base, dotted);
  const Path cword = cand.word();
  const std::vector<Arrow>& expect = cword.letters();
  for (int k = 0; k < n; ++k)
    if (w[from + k] != expect[k]) return std::nullopt;
  return cand;
}

ResolutionElement split(int n, const Path& p) {
  ResolutionElement out;
  const int len = p.length();
  if (n == 0) {
    for (int cut = 0; cut <= len; ++cut) {
      Path u = subword(p, 0, cut);
      Path v = subword(p, cut, len);
      out.add(reduce(u), Ambiguity::vertex(v.target()), reduce(v), 1);
    }
    return out;
  }
  for (int from = 0; from + n <= len; ++from)
    if (auto r = match_S(n, p, from))
      out.add(reduce(subword(p, 0, from)), *r, reduce(subword(p, from + n, len)), 1);
  return out;
}

ResolutionElement split_L(const Path& p, int level) {
  const int len = p.length();
  for (int from = 0; from + level <= len; ++from)
    if (auto r = match_S(level, p, from)) {
      ResolutionElement out;
      out.add(reduce(subword(p, 0, from)), *r, reduce(subword(p, from + level, len)), 1);
      return out;
    }
  throw std::domain_error("no reducible subpath");
}

ResolutionElement split_R(const Path& p, int level) {
  const int len = p.length();
  for (int from = len - level; from >= 0; --from)
    if (auto r = match_S(level, p, from)) {
      ResolutionElement out;
      out.add(reduce(subword(p, 0, from)), *r, reduce(subword(p, from + level, len)), 1);
      return out;
    }
  throw std::domain_error("no reducible subpath");
}

ResolutionElement boundary_gen(int n, const Ambiguity& g) {
  if (n < 1 || g.n() != n)
    throw std::invalid_argument("boundary_gen: degree mismatch");
  ResolutionElement out;
  if (n == 1) {
    Mor w = reduce(g.word());
    out.add(e(w.tgt), Ambiguity::vertex(w.tgt), w, 1);
    out.add(w, Ambiguity::vertex(w.src), e(w.src), -1);
    return out;
  }
  const int i = g.base();
  const bool even = (n % 2 == 0);
  auto F = [&](Fam f, bool dotted) { return Ambiguity::family(n - 1, f, i, dotted); };
  if (!g.dotted() && g.fam() == Fam::Q) {
    if (even) {
      out.add(e(i), F(Fam::Q, false), p(i + 1), 1);
      out.add(q(i), F(Fam::P, false), e(i), 1);
      out.add(e(i), F(Fam::Q, true), e(i), -1);
    } else {
      out.add(e(i), F(Fam::Q, false), q(i), 1);
      out.add(q(i), F(Fam::P, false), e(i + 1), -1);
      out.add(e(i), F(Fam::Q, true), e(i + 1), 1);
    }
  } else if (!g.dotted() && g.fam() == Fam::P) {
    if (even) {
      out.add(e(i + 1), F(Fam::P, false), q(i), 1);
      out.add(p(i + 1), F(Fam::Q, false), e(i + 1), 1);
      out.add(e(i + 1), F(Fam::P, true), e(i + 1), -1);
    } else {
      out.add(e(i + 1), F(Fam::P, false), p(i + 1), 1);
      out.add(p(i + 1), F(Fam::Q, false), e(i), -1);
      out.add(e(i + 1), F(Fam::P, true), e(i), 1);
    }
  } else if (g.dotted() && g.fam() == Fam::Q) {
    if (even) {
      out.add(e(i), F(Fam::Q, true), q(i), 1);
      out.add(s(i), F(Fam::Q, false), e(i + 1), 1);
      out.add(q(i), F(Fam::P, true), e(i + 1), -1);
      out.add(e(i), F(Fam::Q, false), s(i + 1), -1);
    } else {
      out.add(e(i), F(Fam::Q, true), p(i + 1), 1);
      out.add(s(i), F(Fam::Q, false), e(i), -1);
      out.add(q(i), F(Fam::P, true), e(i), 1);
      out.add(e(i), F(Fam::Q, false), s(i), 1);
    }
  } else {
    if (even) {
      out.add(e(i + 1), F(Fam::P, true), p(i + 1), 1);
      out.add(s(i + 1), F(Fam::P, false), e(i), 1);
      out.add(p(i + 1), F(Fam::Q, true), e(i), -1);
      out.add(e(i + 1), F(Fam::P, false), s(i), -1);
    } else {
      out.add(e(i + 1), F(Fam::P, true), q(i), 1);
      out.add(s(i + 1), F(Fam::P, false), e(i + 1), -1);
      out.add(p(i + 1), F(Fam::Q, true), e(i + 1), 1);
      out.add(e(i + 1), F(Fam::P, false), s(i + 1), 1);
    }
  }
  return out;
}

ResolutionElement boundary(int n, const ResolutionElement& x) {
  if (!x.is_zero() && x.degree() != n)
    throw std::invalid_argument("boundary: element degree does not match n");
  ResolutionElement out;
  for (const auto& [t, c] : x.terms())
    out += c * act(AlgElem(t.left), boundary_gen(n, t.gen), AlgElem(t.right));
  return out;
}

AlgElem augment(const ResolutionElement& x) {
  if (!x.is_zero() && x.degree() != 0)
    throw std::invalid_argument("augment: element is not of degree 0");
  AlgElem out;
  for (const auto& [t, c] : x.terms()) out.add(mu2(t.left, t.right), c);
  return out;
}

ResolutionElement delta_map(int n, const ResolutionElement& x) {
  if (n < 1) throw std::invalid_argument("delta_map: use augment for degree 0");
  if (!x.is_zero() && x.degree() != n)
    throw std::invalid_argument("delta_map: element degree does not match n");
  ResolutionElement out;
  for (const auto& [t, c] : x.terms()) {
    if (n == 1) {
      Mor w = reduce(t.gen.word());
      out.add(t.left, Ambiguity::vertex(t.left.src), mu2(w, t.right), c);
      out.add(mu2(t.left, w), Ambiguity::vertex(t.right.tgt), t.right, -c);
    } else {
      Path w = t.gen.word();
      ResolutionElement piece = (n % 2 == 0)
                                    ? split(n - 1, w)
                                    : split_L(w, n - 1) - split_R(w, n - 1);
      out += c * act(AlgElem(t.left), piece, AlgElem(t.right));
    }
  }
  return out;
}

ResolutionElement gamma_map(int k, const ResolutionElement& x) {
  if (k < 0) throw std::invalid_argument("gamma_map: use gamma_base for the algebra");
  if (!x.is_zero() && x.degree() != k)
    throw std::invalid_argument("gamma_map: element degree does not match k");
  const Rat sign = (k % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^(k+1)
  ResolutionElement out;
  for (const auto& [t, c] : x.terms()) {
    Path xw = concat(path_of(t.left), t.gen.word());
    out += (sign * c) * right_act(split(k + 1, xw), AlgElem(t.right));
  }
  return out;
}

ResolutionElement gamma_base(const AlgElem& x) {
  ResolutionElement out;
  for (const auto& [m, c] : x.terms())
    out.add(e(m.tgt), Ambiguity::vertex(m.tgt), m, c);
  return out;
}

namespace {

// Shared scratch for one top-level boundary_recursive call: the recursion
// re-enters itself on lower degrees many times, so memoize per generator.
struct RecursionScratch {
  std::map<Ambiguity, ResolutionElement> memo;

  ResolutionElement on_gen(int n, const Ambiguity& g);

  ResolutionElement on_elem(int n, const ResolutionElement& x) {
    ResolutionElement out;
    for (const auto& [t, c] : x.terms())
      out += c * act(AlgElem(t.left), on_gen(n, t.gen), AlgElem(t.right));
    return out;
  }

  // rho_k(z) = sum_m gamma_k(t_m) with t_0 = z and
  // t_{m+1} = (delta_{k+1} - par_{k+1}) gamma_k(t_m).  Each pass strips a
  // dot from the top of the words involved, so the series stops after at
  // most the dot count of z; the cap guards against bugs, not inputs.
  ResolutionElement rho(int k, const ResolutionElement& z) {
    ResolutionElement total;
    ResolutionElement t = z;
    int cap = 2;
    for (const auto& [term, c] : z.terms())
      cap += term.left.dots + term.right.dots + (term.gen.dotted() ? 1 : 0);
    for (int m = 0; !t.is_zero(); ++m) {
      if (m > cap)
        throw std::logic_error("rho: homotopy series failed to terminate");
      ResolutionElement g = gamma_map(k, t);
      total += g;
      t = delta_map(k + 1, g) - on_elem(k + 1, g);
    }
    return total;
  }
};

ResolutionElement RecursionScratch::on_gen(int n, const Ambiguity& g) {
  if (auto it = memo.find(g); it != memo.end()) return it->second;
  ResolutionElement one;
  one.add(e(g.tgt()), g, e(g.src()), 1);
  ResolutionElement d = delta_map(n, one);
  ResolutionElement result = d;
  if (n >= 2) {
    result -= rho(n - 2, on_elem(n - 1, d));
  } else {
    // rho_{-1} collapses to gamma_base because the degree-0 differential
    // and delta_0 coincide; the correction is gamma_base(augment(d)).
    result -= gamma_base(augment(d));
  }
  memo.emplace(g, result);
  return result;
}

}  // namespace

ResolutionElement boundary_recursive(int n, const Ambiguity& gen) {
  if (n < 1 || gen.n() != n)
    throw std::invalid_argument("boundary_recursive: degree mismatch");
  RecursionScratch scratch;
  return scratch.on_gen(n, gen);
}

std::vector<ResTerm> slice_basis(int n, const SliceKey& key, const QuiverConfig& cfg) {
  std::vector<ResTerm> out;
  for (const Ambiguity& r : enumerate_S(n, cfg)) {
    const int rq = r.qdeg();
    const int ubase = std::abs(key.tgt - r.tgt());
    const int vbase = std::abs(r.src() - key.src);
    for (int alpha = 0;; ++alpha) {
      const int rem = key.q - rq - (ubase + 2 * alpha);
      if (rem < 0) break;
      if (rem >= vbase && (rem - vbase) % 2 == 0)
        out.push_back({a(key.tgt, r.tgt(), alpha), r, a(r.src(), key.src, (rem - vbase) / 2)});
    }
  }
  return out;
}

namespace {

// Rank of the differential P_n -> P_{n-1} restricted to one slice.
int slice_rank(int n, const std::vector<ResTerm>& domain,
               const std::vector<ResTerm>& codomain) {
  if (domain.empty() || codomain.empty()) return 0;
  std::map<ResTerm, std::size_t> row;
  for (std::size_t k = 0; k < codomain.size(); ++k) row[codomain[k]] = k;
  RatMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    ResolutionElement x;
    x.add(domain[j], 1);
    const ResolutionElement dx = boundary(n, x);
    for (const auto& [t, c] : dx.terms()) {
      auto it = row.find(t);
      if (it == row.end())
        throw std::logic_error("slice_rank: differential left the slice");
      m.at(it->second, j) = c;
    }
  }
  return m.rank();
}

}  // namespace

ExactnessReport check_exactness(const QuiverConfig& cfg, int maxN, int maxQ) {
  if (maxN < 1) throw std::invalid_argument("check_exactness: maxN must be >= 1");
  ExactnessReport rep;
  const int N = cfg.punctures;
  for (int t = 0; t <= N; ++t)
    for (int s = 0; s <= N; ++s)
      for (int g = 0; g <= maxQ; ++g) {
        const SliceKey key{t, s, g};
        std::vector<std::vector<ResTerm>> bases(maxN + 1);
        bool any = false;
        for (int n = 0; n <= maxN; ++n) {
          bases[n] = slice_basis(n, key, cfg);
          any = any || !bases[n].empty();
        }
        if (!any) continue;
        std::vector<int> rank(maxN + 1, 0);
        for (int n = 1; n <= maxN; ++n)
          rank[n] = slice_rank(n, bases[n], bases[n - 1]);
        const int dimA =
            (g >= std::abs(t - s) && (g - std::abs(t - s)) % 2 == 0) ? 1 : 0;
        const int rank0 = bases[0].empty() ? 0 : 1;
        for (int n = 0; n < maxN; ++n) {
          const int dim = static_cast<int>(bases[n].size());
          if (dim == 0) continue;
          ExactnessRow row;
          row.slice = key;
          row.degree = n;
          row.dim = dim;
          row.rank_kernel = dim - (n == 0 ? rank0 : rank[n]);
          row.rank_image = rank[n + 1];
          row.exact = (row.rank_kernel == row.rank_image) &&
                      (n > 0 || rank0 == dimA);
          rep.all_exact = rep.all_exact && row.exact;
          rep.rows.push_back(row);
        }
      }
  return rep;
}

std::string to_string(const ResTerm& t) {
  return to_string(t.left) + " (x) " + to_string(t.gen) + " (x) " + to_string(t.right);
}

std::string to_string(const ResolutionElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (ac != 1) os << ac.str() << "*";
    os << to_string(t);
    first = false;
  }
  return os.str();
}

}  // namespace klrw

#include "klrw/hochschild.hpp"

#include <cstdlib>
#include <stdexcept>

#include "klrw/matrix.hpp"

namespace klrw {

namespace {

// Does the coordinate (w, l) exist in Hom(P_n, M)?  The value of (w, l) is
// a(tgt w, src w) * s^l, which must be a basis element of the module.
bool coord_exists(const BimoduleModel& M, const Ambiguity& w, int l) {
  if (l < 0) return false;
  switch (M.kind) {
    case ModuleKind::Diagonal:
      return true;
    case ModuleKind::Braiding:
      return !(w.tgt() == M.idx && w.src() == M.idx && l == 0);
    case ModuleKind::Cokernel:
      return w.tgt() == M.idx && w.src() == M.idx && l == 0;
  }
  return false;
}

}  // namespace

Cochain::Cochain(BimoduleModel mod, int degree, QuiverConfig cfg)
    : mod_(mod), degree_(degree), cfg_(cfg) {
  if (degree < 0) throw std::invalid_argument("Cochain: negative degree");
}

Rat Cochain::coeff(const Ambiguity& w, int l) const {
  auto it = coeffs_.find({w, l});
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void Cochain::add(const Ambiguity& w, int l, const Rat& c) {
  if (c == 0) return;
  if (w.n() != degree_)
    throw std::invalid_argument("Cochain: generator degree mismatch");
  if (!coord_exists(mod_, w, l))
    throw std::invalid_argument("Cochain: coordinate not in the module");
  auto [it, fresh] = coeffs_.emplace(std::make_pair(w, l), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

ModElem Cochain::eval(const Ambiguity& w) const {
  ModElem out;
  for (auto it = coeffs_.lower_bound({w, 0});
       it != coeffs_.end() && it->first.first == w; ++it) {
    if (mod_.kind == ModuleKind::Cokernel)
      out.unit += it->second;
    else
      out.alg.add(a(w.tgt(), w.src(), it->first.second), it->second);
  }
  return out;
}

ModElem Cochain::eval(const ResolutionElement& x) const {
  ModElem out;
  if (x.is_zero()) return out;
  if (x.degree() != degree_)
    throw std::invalid_argument("Cochain: element degree mismatch");
  for (const auto& [t, c] : x.terms())
    out += c * mod_act(mod_, AlgElem(t.left), eval(t.gen), AlgElem(t.right));
  return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (mod_ != o.mod_ || degree_ != o.degree_)
    throw std::invalid_argument("Cochain: shape mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (mod_ != o.mod_ || degree_ != o.degree_)
    throw std::invalid_argument("Cochain: shape mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
  return *this;
}

Cochain& Cochain::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

Cochain induced_d(const Cochain& phi) {
  const int up = phi.degree() + 1;
  Cochain out(phi.module(), up, phi.config());
  for (const Ambiguity& g : enumerate_S(up, phi.config())) {
    const ModElem v = phi.eval(boundary_gen(up, g));
    if (phi.module().kind == ModuleKind::Cokernel) {
      out.add(g, 0, v.unit);
    } else {
      for (const auto& [m, c] : v.alg.terms()) out.add(g, m.dots, c);
    }
  }
  return out;
}

Cochain induced_d_closed(const Cochain& phi) {
  if (phi.module().kind != ModuleKind::Diagonal)
    throw std::invalid_argument("induced_d_closed: diagonal module only");
  const QuiverConfig& cfg = phi.config();
  const int N = cfg.punctures;
  const int n = phi.degree();
  Cochain out(phi.module(), n + 1, cfg);

  int lmax = 0;
  for (const auto& [k, c] : phi.coeffs())
    if (k.second > lmax) lmax = k.second;

  auto F = [&](Fam f, int base, bool dotted) {
    return Ambiguity::family(n == 0 ? 1 : n, f, base, dotted);
  };

  for (int l = 0; l <= lmax + 1; ++l) {
    if (n == 0) {
      for (int i = 0; i < N; ++i) {
        const Rat lo = phi.coeff(Ambiguity::vertex(i), l);
        const Rat hi = phi.coeff(Ambiguity::vertex(i + 1), l);
        out.add(Ambiguity::family(1, Fam::P, i, false), l, hi - lo);
        out.add(Ambiguity::family(1, Fam::Q, i, false), l, lo - hi);
        // dotted letters: zero rule
      }
    } else if (n == 1) {
      for (int i = 0; i < N; ++i) {
        const Rat pv = phi.coeff(F(Fam::P, i, false), l - 1);
        const Rat qv = phi.coeff(F(Fam::Q, i, false), l - 1);
        const Rat slo = phi.coeff(Ambiguity::family(1, Fam::Q, i, true), l);
        const Rat shi = phi.coeff(Ambiguity::family(1, Fam::Q, i + 1, true), l);
        out.add(Ambiguity::family(2, Fam::P, i, false), l, pv + qv - shi);
        out.add(Ambiguity::family(2, Fam::Q, i, false), l, qv + pv - slo);
        out.add(Ambiguity::family(2, Fam::P, i, true), l, shi - slo);
        out.add(Ambiguity::family(2, Fam::Q, i, true), l, slo - shi);
      }
    } else if (n % 2 == 0) {
      for (int i = 0; i < N; ++i) {
        const Rat pv = phi.coeff(F(Fam::P, i, false), l);
        const Rat qv = phi.coeff(F(Fam::Q, i, false), l);
        const Rat sp = phi.coeff(F(Fam::P, i, true), l);
        const Rat sq = phi.coeff(F(Fam::Q, i, true), l);
        const Rat spd = phi.coeff(F(Fam::P, i, true), l - 1);
        const Rat sqd = phi.coeff(F(Fam::Q, i, true), l - 1);
        out.add(Ambiguity::family(n + 1, Fam::P, i, false), l, pv - qv + sp);
        out.add(Ambiguity::family(n + 1, Fam::Q, i, false), l, qv - pv + sq);
        out.add(Ambiguity::family(n + 1, Fam::P, i, true), l, spd + sqd);
        out.add(Ambiguity::family(n + 1, Fam::Q, i, true), l, sqd + spd);
      }
    } else {
      for (int i = 0; i < N; ++i) {
        const Rat pvd = phi.coeff(F(Fam::P, i, false), l - 1);
        const Rat qvd = phi.coeff(F(Fam::Q, i, false), l - 1);
        const Rat sp = phi.coeff(F(Fam::P, i, true), l);
        const Rat sq = phi.coeff(F(Fam::Q, i, true), l);
        out.add(Ambiguity::family(n + 1, Fam::P, i, false), l, pvd + qvd - sp);
        out.add(Ambiguity::family(n + 1, Fam::Q, i, false), l, qvd + pvd - sq);
        out.add(Ambiguity::family(n + 1, Fam::P, i, true), l, sp - sq);
        out.add(Ambiguity::family(n + 1, Fam::Q, i, true), l, sq - sp);
      }
    }
  }
  return out;
}

std::vector<std::pair<Ambiguity, int>> cochain_coords(const BimoduleModel& M, int n,
                                                      int D, const QuiverConfig& cfg) {
  std::vector<std::pair<Ambiguity, int>> out;
  for (const Ambiguity& w : enumerate_S(n, cfg)) {
    const int stride = std::abs(w.tgt() - w.src());
    if (M.kind == ModuleKind::Cokernel) {
      if (w.tgt() == M.idx && w.src() == M.idx && w.qdeg() == D)
        out.push_back({w, 0});
      continue;
    }
    const int twice_l = w.qdeg() - D - stride;
    if (twice_l < 0 || twice_l % 2 != 0) continue;
    const int l = twice_l / 2;
    if (!coord_exists(M, w, l)) continue;
    out.push_back({w, l});
  }
  return out;
}

namespace {

// Matrix of d_n between the D-slices, columns indexed by cochain_coords at
// n, rows at n+1.  Throws if the differential leaves the slice.
RatMatrix slice_matrix(const BimoduleModel& M, int n, const QuiverConfig& cfg,
                       const std::vector<std::pair<Ambiguity, int>>& cols,
                       const std::vector<std::pair<Ambiguity, int>>& rows) {
  std::map<std::pair<Ambiguity, int>, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  RatMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Cochain phi(M, n, cfg);
    phi.add(cols[j].first, cols[j].second, Rat(1));
    const Cochain dphi = induced_d(phi);
    for (const auto& [k, c] : dphi.coeffs()) {
      auto it = row_of.find(k);
      if (it == row_of.end())
        throw std::logic_error("hh slice: differential left the degree slice");
      m.at(it->second, j) = c;
    }
  }
  return m;
}

Cochain from_vector(const BimoduleModel& M, int n, const QuiverConfig& cfg,
                    const std::vector<std::pair<Ambiguity, int>>& coords,
                    const std::vector<Rat>& v) {
  Cochain phi(M, n, cfg);
  for (std::size_t j = 0; j < coords.size(); ++j)
    phi.add(coords[j].first, coords[j].second, v[j]);
  return phi;
}

}  // namespace

std::map<std::pair<int, int>, int> hh_dims(const BimoduleModel& M, int nMax, int dMin,
                                           int dMax, const QuiverConfig& cfg) {
  std::map<std::pair<int, int>, int> out;
  for (int D = dMin; D <= dMax; ++D) {
    std::vector<std::vector<std::pair<Ambiguity, int>>> coords(nMax + 2);
    for (int n = 0; n <= nMax + 1; ++n) coords[n] = cochain_coords(M, n, D, cfg);
    std::vector<int> rank(nMax + 1, 0);
    for (int n = 0; n <= nMax; ++n)
      rank[n] = slice_matrix(M, n, cfg, coords[n], coords[n + 1]).rank();
    for (int n = 0; n <= nMax; ++n) {
      const int ker = static_cast<int>(coords[n].size()) - rank[n];
      out[{n, D}] = ker - (n > 0 ? rank[n - 1] : 0);
    }
  }
  return out;
}

std::vector<Cochain> representatives(const BimoduleModel& M, int n, int D,
                                     const QuiverConfig& cfg) {
  const int N = cfg.punctures;
  const bool alg_valued = M.kind != ModuleKind::Cokernel;

  // Closed-form slices of the diagonal module and their braiding
  // restrictions.
  if (alg_valued && n == 0 && D <= 0 && D % 2 == 0) {
    const int l = -D / 2;
    if (M.kind == ModuleKind::Diagonal || l >= 1) {
      Cochain phi(M, 0, cfg);
      for (int t = 0; t <= N; ++t) phi.add(Ambiguity::vertex(t), l, Rat(1));
      return {phi};
    }
    return {};  // the braiding module has no degree-zero class
  }
  if (alg_valued && n == 1 && D <= 0 && D % 2 == 0) {
    const int l = -D / 2;
    Cochain phi(M, 1, cfg);
    for (int t = 0; t <= N; ++t)
      phi.add(Ambiguity::family(1, Fam::Q, t, true), l + 1, Rat(1));
    for (int i = 0; i < N; ++i) {
      phi.add(Ambiguity::family(1, Fam::P, i, false), l, Rat(1, 2));
      phi.add(Ambiguity::family(1, Fam::Q, i, false), l, Rat(1, 2));
    }
    return {phi};
  }
  if (alg_valued && n == 2 && D == 2) {
    std::vector<Cochain> out;
    for (int v = 1; v <= N - 1; ++v) {
      if (M.kind == ModuleKind::Braiding && v == M.idx) continue;
      Cochain phi(M, 2, cfg);
      for (int i = 0; i < N; ++i) {
        const Rat ti(i == v ? 1 : 0);
        const Rat tip(i + 1 == v ? 1 : 0);
        phi.add(Ambiguity::family(2, Fam::Q, i, false), 0, -ti);
        phi.add(Ambiguity::family(2, Fam::P, i, false), 0, tip);
        phi.add(Ambiguity::family(2, Fam::Q, i, true), 0, ti + tip);
        phi.add(Ambiguity::family(2, Fam::P, i, true), 0, -ti - tip);
      }
      out.push_back(phi);
    }
    return out;
  }

  // Generic slice: kernel of d_n modulo the image of d_{n-1}.
  const auto cols = cochain_coords(M, n, D, cfg);
  const auto rows = cochain_coords(M, n + 1, D, cfg);
  if (cols.empty()) return {};
  const RatMatrix dn = slice_matrix(M, n, cfg, cols, rows);
  const std::vector<std::vector<Rat>> kern = dn.kernel_basis();
  std::vector<std::vector<Rat>> image;
  if (n > 0) {
    const auto below = cochain_coords(M, n - 1, D, cfg);
    const RatMatrix dprev = slice_matrix(M, n - 1, cfg, below, cols);
    for (std::size_t j = 0; j < dprev.cols(); ++j) {
      std::vector<Rat> col(dprev.rows());
      for (std::size_t r = 0; r < dprev.rows(); ++r) col[r] = dprev.at(r, j);
      image.push_back(std::move(col));
    }
  }
  std::vector<Cochain> out;
  for (std::size_t k : independent_mod_span(image, kern, cols.size()))
    out.push_back(from_vector(M, n, cfg, cols, kern[k]));
  return out;
}

std::string to_string(const Cochain& phi) {
  if (phi.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : phi.coeffs()) {
    if (!first) s += ", ";
    first = false;
    s += "phi_" + std::to_string(k.second) + "(" + to_string(k.first) +
         ") = " + c.str();
  }
  return s;
}

}  // namespace klrw

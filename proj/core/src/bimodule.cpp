#include "klrw/bimodule.hpp"

#include <stdexcept>

namespace klrw {

ModElem& ModElem::operator+=(const ModElem& o) {
  alg += o.alg;
  unit += o.unit;
  return *this;
}

ModElem& ModElem::operator-=(const ModElem& o) {
  alg -= o.alg;
  unit -= o.unit;
  return *this;
}

ModElem& ModElem::operator*=(const Rat& c) {
  alg *= c;
  unit *= c;
  return *this;
}

ModElem mod_elem(const BimoduleModel& M, const Mor& label, const Rat& c) {
  ModElem out;
  switch (M.kind) {
    case ModuleKind::Diagonal:
      out.alg.add(label, c);
      return out;
    case ModuleKind::Braiding:
      if (label == e(M.idx))
        throw std::invalid_argument("mod_elem: e(i) is not in the braiding module");
      out.alg.add(label, c);
      return out;
    case ModuleKind::Cokernel:
      if (label != e(M.idx))
        throw std::invalid_argument("mod_elem: cokernel basis is the class of e(i)");
      out.unit = c;
      return out;
  }
  throw std::logic_error("mod_elem: bad kind");
}

std::vector<Mor> module_basis(const BimoduleModel& M, int tgt, int src, int maxQ,
                              const QuiverConfig& cfg) {
  if (!cfg.valid_object(tgt) || !cfg.valid_object(src))
    throw std::invalid_argument("module_basis: object out of range");
  std::vector<Mor> out;
  if (M.kind == ModuleKind::Cokernel) {
    if (tgt == M.idx && src == M.idx && maxQ >= 0) out.push_back(e(M.idx));
    return out;
  }
  const int stride = std::abs(tgt - src);
  for (int dots = 0; stride + 2 * dots <= maxQ; ++dots) {
    Mor m = a(tgt, src, dots);
    if (M.kind == ModuleKind::Braiding && m == e(M.idx)) continue;
    out.push_back(m);
  }
  return out;
}

ModElem mod_act(const BimoduleModel& M, const AlgElem& x, const ModElem& m,
                const AlgElem& y) {
  ModElem out;
  switch (M.kind) {
    case ModuleKind::Diagonal:
      out.alg = mu2(x, mu2(m.alg, y));
      return out;
    case ModuleKind::Braiding:
      out.alg = mu2(x, mu2(m.alg, y));
      if (out.alg.coeff(e(M.idx)) != 0)
        throw std::logic_error("mod_act: braiding module action regenerated e(i)");
      return out;
    case ModuleKind::Cokernel:
      out.unit = x.coeff(e(M.idx)) * m.unit * y.coeff(e(M.idx));
      return out;
  }
  throw std::logic_error("mod_act: bad kind");
}

int qdeg(const BimoduleModel& M, const ModElem& m) {
  if (M.kind == ModuleKind::Cokernel) return 0;
  if (m.alg.is_zero()) return 0;
  return qdeg(m.alg.terms().begin()->first);
}

AlgElem iota(int i, const AlgElem& x) {
  if (x.coeff(e(i)) != 0)
    throw std::invalid_argument("iota: element touches e(i), not in the braiding module");
  return x;
}

ModElem pi(int i, const AlgElem& x) {
  ModElem out;
  out.unit = x.coeff(e(i));
  return out;
}

std::string to_string(const BimoduleModel& M) {
  switch (M.kind) {
    case ModuleKind::Diagonal: return "delta";
    case ModuleKind::Braiding: return "B(" + std::to_string(M.idx) + ")";
    case ModuleKind::Cokernel: return "S(" + std::to_string(M.idx) + ")";
  }
  return "?";
}

std::string to_string(const BimoduleModel& M, const ModElem& m) {
  if (M.kind == ModuleKind::Cokernel) {
    if (m.unit == 0) return "0";
    std::string c = m.unit.str();
    return (c == "1" ? "" : c + "*") + "[e(" + std::to_string(M.idx) + ")]";
  }
  return to_string(m.alg);
}

}  // namespace klrw

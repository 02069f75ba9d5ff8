#include "klrw/transfer.hpp"

#include <set>
#include <stdexcept>

namespace klrw {

ResolutionElement transfer_G(int n, const BarElement& x) {
  if (n < 0) throw std::invalid_argument("transfer_G: negative degree");
  if (!x.is_zero() && x.degree() != n)
    throw std::invalid_argument("transfer_G: degree mismatch");
  ResolutionElement out;
  for (const auto& [t, c] : x.terms()) {
    Path w = Path::vertex(t.a.src);
    for (const Mor& y : t.middle) w = concat(w, path_of(y));
    std::set<ResTerm> seen;
    for (const Path& r : reachable_words(w)) {
      const ResolutionElement sp = split(n, r);
      for (const auto& [st, sc] : sp.terms()) seen.insert(st);
    }
    ResolutionElement mid;
    for (const ResTerm& st : seen) mid.add(st, Rat(1));
    out += c * act(AlgElem(t.a), mid, AlgElem(t.b));
  }
  return out;
}

}  // namespace klrw

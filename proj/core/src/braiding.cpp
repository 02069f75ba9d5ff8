#include "klrw/braiding.hpp"

#include <stdexcept>

namespace klrw {

namespace {

void check_braid_index(int i, const QuiverConfig& cfg) {
  if (!cfg.valid_braid_index(i)) {
    throw std::invalid_argument("braiding: index must satisfy 1 <= i <= N-1");
  }
}

int sgn(int v) { return (v > 0) - (v < 0); }

}  // namespace

TwComplex beta_object(int i, int j, const QuiverConfig& cfg) {
  check_braid_index(i, cfg);
  if (!cfg.valid_object(j)) {
    throw std::invalid_argument("beta_object: invalid generator index");
  }
  if (j != i) return TwComplex::single(j);
  TwComplex cone({Slot{i, -1}, Slot{i - 1, 0}, Slot{i + 1, 0}});
  cone.set_delta(1, 0, AlgElem(q(i - 1)));
  cone.set_delta(2, 0, AlgElem(p(i + 1), Rat(-1)));
  return cone;
}

TwMorphism beta1(int i, const Mor& a, const QuiverConfig& cfg) {
  check_braid_index(i, cfg);
  const int k = a.tgt;
  const int j = a.src;
  TwMorphism out(beta_object(i, j, cfg), beta_object(i, k, cfg), 0);
  if (k == i && j == i) {
    // dots act diagonally on the whole cone
    out.add_block(0, 0, AlgElem(Mor{i, i, a.dots}));
    out.add_block(1, 1, AlgElem(Mor{i - 1, i - 1, a.dots}));
    out.add_block(2, 2, AlgElem(Mor{i + 1, i + 1, a.dots}));
  } else if (k == i) {
    // target side twisted: the strand enters through the summand next to j
    if (j > i) {
      out.add_block(2, 0, AlgElem(Mor{i + 1, j, a.dots}));
    } else {
      out.add_block(1, 0, AlgElem(Mor{i - 1, j, a.dots}));
    }
  } else if (j == i) {
    // source side twisted: leaving through the summand away from k costs a dot
    if (k > i) {
      out.add_block(0, 1, AlgElem(Mor{k, i - 1, a.dots}));
      out.add_block(0, 2, AlgElem(Mor{k, i + 1, a.dots + 1}));
    } else {
      out.add_block(0, 1, AlgElem(Mor{k, i - 1, a.dots + 1}));
      out.add_block(0, 2, AlgElem(Mor{k, i + 1, a.dots}));
    }
  } else {
    out.add_block(0, 0, AlgElem(a));
  }
  return out;
}

TwMorphism beta2(int i, const Mor& a2, const Mor& a1, const QuiverConfig& cfg) {
  check_braid_index(i, cfg);
  if (a2.src != a1.tgt) {
    throw std::invalid_argument("beta2: pair is not composable");
  }
  const int l = a2.tgt;
  const int k = a1.tgt;
  const int j = a1.src;
  TwMorphism out(beta_object(i, j, cfg), beta_object(i, l, cfg), -1);
  if (l != i) return out;
  const int dots = a2.dots + a1.dots + (i > k ? i - k : k - i) - 1;
  if (j != i) {
    if ((i - j) * (i - k) < 0) {
      out.add_block(0, 0, AlgElem(Mor{i, j, dots}, Rat(sgn(i - k))));
    }
  } else if (k != i) {
    const int side = sgn(i - k);
    // side = +1 leaves through T_{i+1} (slot 2), side = -1 through T_{i-1}
    out.add_block(0, side > 0 ? 2 : 1, AlgElem(Mor{i, i + side, dots}, Rat(side)));
  }
  return out;
}

TwMorphism verify_functor(int i, const std::vector<Mor>& chain, const QuiverConfig& cfg) {
  check_braid_index(i, cfg);
  if (chain.empty() || chain.size() > 3) {
    throw std::invalid_argument("verify_functor: chain length must be 1, 2 or 3");
  }
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    if (chain[t].src != chain[t + 1].tgt) {
      throw std::invalid_argument("verify_functor: chain is not composable");
    }
  }
  if (chain.size() == 1) {
    return mu_delta1(beta1(i, chain[0], cfg));
  }
  if (chain.size() == 2) {
    const Mor& a2 = chain[0];
    const Mor& a1 = chain[1];
    TwMorphism res = mu_delta1(beta2(i, a2, a1, cfg));
    res += mu_delta2(beta1(i, a2, cfg), beta1(i, a1, cfg));
    res -= beta1(i, mu2(a2, a1), cfg);
    return res;
  }
  const Mor& a3 = chain[0];
  const Mor& a2 = chain[1];
  const Mor& a1 = chain[2];
  TwMorphism res = mu_delta2(beta2(i, a3, a2, cfg), beta1(i, a1, cfg));
  res += mu_delta2(beta1(i, a3, cfg), beta2(i, a2, a1, cfg));
  res -= beta2(i, a3, mu2(a2, a1), cfg);
  res += beta2(i, mu2(a3, a2), a1, cfg);
  return res;
}

int slot_charge(const TwComplex& c, int k) {
  if (c.size() == 1) return 0;
  return c.slot(k).degree == -1 ? 2 : 1;
}

}  // namespace klrw

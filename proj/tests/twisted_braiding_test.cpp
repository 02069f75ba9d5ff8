#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "klrw/braiding.hpp"

using namespace klrw;

namespace {

std::vector<Mor> all_basis(const QuiverConfig& cfg, int maxDots) {
  std::vector<Mor> out;
  for (int t = 0; t <= cfg.max_object(); ++t)
    for (int s_ = 0; s_ <= cfg.max_object(); ++s_)
      for (int d = 0; d <= maxDots; ++d) out.push_back(a(t, s_, d));
  return out;
}

}  // namespace

TEST_CASE("complex differentials validate and square to zero") {
  QuiverConfig cfg(4);

  TwComplex bad({Slot{2, -1}, Slot{1, 0}});
  CHECK_THROWS_AS(bad.set_delta(0, 1, AlgElem(p(2))), std::invalid_argument);  // wrong direction
  CHECK_THROWS_AS(bad.set_delta(1, 0, AlgElem(p(2))), std::invalid_argument);  // wrong endpoints
  CHECK_THROWS_AS(bad.set_delta(1, 5, AlgElem(q(1))), std::out_of_range);

  for (int N = 2; N <= 5; ++N) {
    QuiverConfig c(N);
    for (int i = 1; i <= N - 1; ++i)
      for (int j = 0; j <= N; ++j) CHECK(beta_object(i, j, c).delta_squares_to_zero());
  }

  // the one-crossing cone T_2[-1] -> T_1
  TwComplex std_cone({Slot{2, -1}, Slot{1, 0}});
  std_cone.set_delta(1, 0, AlgElem(q(1)));
  CHECK(std_cone.delta_squares_to_zero());

  // the interval resolution T_2[-1] -> T_1 (+) T_3 -> T_2[1]; the composite
  // cancels as s_2 - s_2, and flipping either sign in the second map breaks it
  TwComplex interval({Slot{2, -1}, Slot{1, 0}, Slot{3, 0}, Slot{2, 1}});
  interval.set_delta(1, 0, AlgElem(q(1)));
  interval.set_delta(2, 0, AlgElem(p(3), Rat(-1)));
  interval.set_delta(3, 1, AlgElem(p(2)));
  interval.set_delta(3, 2, AlgElem(q(2)));
  CHECK(interval.delta_squares_to_zero());

  TwComplex broken = interval;
  broken.set_delta(3, 2, AlgElem(q(2), Rat(-1)));
  CHECK_FALSE(broken.delta_squares_to_zero());
}

TEST_CASE("beta fixes every untwisted generator and twists T_i into the cone") {
  QuiverConfig cfg(4);
  for (int j = 0; j <= 4; ++j) {
    if (j == 2) continue;
    CHECK(beta_object(2, j, cfg) == TwComplex::single(j));
  }
  TwComplex cone = beta_object(2, 2, cfg);
  REQUIRE(cone.size() == 3);
  CHECK(cone.slot(0) == Slot{2, -1});
  CHECK(cone.slot(1) == Slot{1, 0});
  CHECK(cone.slot(2) == Slot{3, 0});
  CHECK(cone.delta(1, 0) == AlgElem(q(1)));
  CHECK(cone.delta(2, 0) == AlgElem(p(3), Rat(-1)));
  CHECK(cone.delta_entries().size() == 2);

  CHECK_THROWS_AS(beta_object(0, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(beta_object(4, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(beta_object(1, 0, QuiverConfig(1)), std::invalid_argument);
}

TEST_CASE("beta1 routes morphisms through the cone summands") {
  QuiverConfig cfg(4);
  const int i = 2;

  // both endpoints away from i: the identity block
  TwMorphism plain = beta1(i, a(1, 3), cfg);
  CHECK(plain.blocks().size() == 1);
  CHECK(plain.block(0, 0) == AlgElem(a(1, 3)));

  // target i, source above: enters through T_3
  TwMorphism in_hi = beta1(i, a(2, 4, 1), cfg);
  CHECK(in_hi.blocks().size() == 1);
  CHECK(in_hi.block(2, 0) == AlgElem(a(3, 4, 1)));

  // target i, source below: enters through T_1
  TwMorphism in_lo = beta1(i, p(2), cfg);
  CHECK(in_lo.blocks().size() == 1);
  CHECK(in_lo.block(1, 0) == AlgElem(e(1)));
  CHECK(beta1(i, q(2), cfg).block(2, 0) == AlgElem(e(3)));

  // source i, target above: the far summand T_3 picks up the dot
  TwMorphism out_hi = beta1(i, p(3), cfg);
  CHECK(out_hi.blocks().size() == 2);
  CHECK(out_hi.block(0, 1) == AlgElem(a(3, 1)));
  CHECK(out_hi.block(0, 2) == AlgElem(s(3)));

  // source i, target below: now T_1 is the far summand
  TwMorphism out_lo = beta1(i, q(1), cfg);
  CHECK(out_lo.blocks().size() == 2);
  CHECK(out_lo.block(0, 1) == AlgElem(s(1)));
  CHECK(out_lo.block(0, 2) == AlgElem(a(1, 3)));

  // dots act diagonally; e_i maps to the identity of the cone
  TwMorphism diag = beta1(i, s(2), cfg);
  CHECK(diag.block(0, 0) == AlgElem(s(2)));
  CHECK(diag.block(1, 1) == AlgElem(s(1)));
  CHECK(diag.block(2, 2) == AlgElem(s(3)));
  CHECK(beta1(i, e(2), cfg) == identity_morphism(beta_object(2, 2, cfg)));
}

TEST_CASE("beta2 is supported on pairs bending across position i") {
  QuiverConfig cfg(4);

  // the crossing pair 1 <- 2 <- 4 bends at 2 with the positive sign
  TwMorphism bend = beta2(2, a(2, 1), a(1, 4), cfg);
  REQUIRE(bend.degree() == -1);
  CHECK(bend.blocks().size() == 1);
  CHECK(bend.block(0, 0) == AlgElem(a(2, 4)));

  // out-and-back pairs at i leave through the summand on the k side
  for (int i = 1; i <= 3; ++i) {
    TwMorphism up = beta2(i, q(i), p(i + 1), cfg);
    CHECK(up.blocks().size() == 1);
    CHECK(up.block(0, 1) == AlgElem(a(i, i - 1), Rat(-1)));
    TwMorphism down = beta2(i, p(i), q(i - 1), cfg);
    CHECK(down.blocks().size() == 1);
    CHECK(down.block(0, 2) == AlgElem(a(i, i + 1)));
  }

  // dots feed into the exponent
  CHECK(beta2(2, a(2, 1, 1), a(1, 4, 2), cfg).block(0, 0) == AlgElem(a(2, 4, 3)));

  CHECK(beta2(2, a(3, 2), a(2, 1), cfg).is_zero());  // target 3 != i
  CHECK(beta2(2, a(2, 1), a(1, 0), cfg).is_zero());  // no bend: 0 < 1 < 2
  CHECK(beta2(2, s(2), a(2, 4), cfg).is_zero());     // middle at i
  CHECK_THROWS_AS(beta2(2, a(2, 1), a(2, 1), cfg), std::invalid_argument);
}

TEST_CASE("braiding blocks conserve the internal degree with slot charges") {
  QuiverConfig cfg(4);
  for (int i = 1; i <= 3; ++i) {
    for (const Mor& m : all_basis(cfg, 3)) {
      TwMorphism f = beta1(i, m, cfg);
      for (const auto& [key, value] : f.blocks()) {
        const int shift = slot_charge(f.target(), key.first) - slot_charge(f.source(), key.second);
        for (const auto& [term, c] : value.terms()) CHECK(qdeg(term) + shift == qdeg(m));
      }
    }
    for (const Mor& m2 : all_basis(cfg, 2))
      for (const Mor& m1 : all_basis(cfg, 2)) {
        if (m2.src != m1.tgt) continue;
        TwMorphism f = beta2(i, m2, m1, cfg);
        for (const auto& [key, value] : f.blocks()) {
          const int shift = slot_charge(f.target(), key.first) - slot_charge(f.source(), key.second);
          for (const auto& [term, c] : value.terms()) {
            CHECK(qdeg(term) + shift == qdeg(m2) + qdeg(m1));
            // the plain-source branch lands in T_i[-1] two units down
            if (m1.src != i) CHECK(qdeg(term) == qdeg(m2) + qdeg(m1) - 2);
          }
        }
      }
  }
}

TEST_CASE("mu_delta1 squares to zero and kills identities") {
  QuiverConfig cfg(4);
  CHECK(mu_delta1(identity_morphism(beta_object(2, 2, cfg))).is_zero());
  CHECK(mu_delta1(identity_morphism(TwComplex::single(3))).is_zero());

  std::mt19937 rng(90210);
  for (int rep = 0; rep < 300; ++rep) {
    const int i = 1 + static_cast<int>(rng() % 3);
    int src_obj = static_cast<int>(rng() % 5);
    int tgt_obj = static_cast<int>(rng() % 5);
    if (rep % 2 == 0) src_obj = i;
    if (rep % 3 == 0) tgt_obj = i;
    const TwComplex S = beta_object(i, src_obj, cfg);
    const TwComplex T = beta_object(i, tgt_obj, cfg);
    const int g = static_cast<int>(rng() % 3) - 1;
    TwMorphism f(S, T, g);
    for (int to = 0; to < T.size(); ++to)
      for (int from = 0; from < S.size(); ++from) {
        if (T.slot(to).degree != S.slot(from).degree + g) continue;
        const int coef = static_cast<int>(rng() % 5) - 2;
        if (coef == 0) continue;
        const int dots = static_cast<int>(rng() % 3);
        f.add_block(to, from, AlgElem(a(T.slot(to).object, S.slot(from).object, dots), Rat(coef)));
      }
    CHECK(mu_delta1(mu_delta1(f)).is_zero());
  }
}

TEST_CASE("the functor equation closes on every short chain") {
  for (int N = 2; N <= 4; ++N) {
    QuiverConfig cfg(N);
    const std::vector<Mor> basis = all_basis(cfg, 2);
    for (int i = 1; i <= N - 1; ++i) {
      for (const Mor& m : basis) CHECK(verify_functor(i, {m}, cfg).is_zero());
      for (const Mor& m2 : basis)
        for (const Mor& m1 : basis) {
          if (m2.src != m1.tgt) continue;
          CHECK(verify_functor(i, {m2, m1}, cfg).is_zero());
        }
      for (const Mor& m3 : basis)
        for (const Mor& m2 : basis) {
          if (m3.src != m2.tgt) continue;
          for (const Mor& m1 : basis) {
            if (m2.src != m1.tgt) continue;
            CHECK(verify_functor(i, {m3, m2, m1}, cfg).is_zero());
          }
        }
    }
  }
}

TEST_CASE("functor verification rejects malformed chains") {
  QuiverConfig cfg(4);
  CHECK(verify_functor(2, {e(3), e(3)}, cfg).is_zero());
  CHECK(verify_functor(2, {e(2), e(2), e(2)}, cfg).is_zero());
  CHECK_THROWS_AS(verify_functor(2, {a(2, 1), a(3, 1)}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(verify_functor(2, {e(1), e(1), e(1), e(1)}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(verify_functor(2, {}, cfg), std::invalid_argument);
}

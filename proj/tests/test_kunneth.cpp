#include "quotbn/kunneth.hpp"

#include "quotbn/rng.hpp"
#include "quotbn/scenario.hpp"

#include "doctest.h"

using namespace quotbn;

namespace {

RingElement gen(const PresentationPtr& p, const std::string& name) {
  return RingElement::from_generator(p, name);
}

}  // namespace

TEST_CASE("decompose reads base, delta and eta parts") {
  Scenario sc = make_scenario(1, 4, 0);
  PresentationPtr p = scenario_ring(sc);
  RingElement eta = gen(p, "eta");
  RingElement t1 = gen(p, "t1");

  SUBCASE("pure eta") {
    KunnethClass kc = decompose(eta);
    CHECK(kc.base_part.is_zero());
    CHECK(kc.delta_parts.empty());
    CHECK(kc.eta_part == RingElement::one(p));
  }
  SUBCASE("direct reading") {
    RingElement z =
        t1 + gen(p, "s1_1") * gen(p, "delta_1") + eta * Rational(5);
    KunnethClass kc = decompose(z);
    CHECK(kc.base_part == t1);
    CHECK(kc.delta_part(1) == gen(p, "s1_1"));
    CHECK(kc.delta_part(2).is_zero());
    CHECK(kc.eta_part == RingElement::constant(p, Rational(5)));
    CHECK(kc.recompose() == z);
  }
  SUBCASE("kernel-dual c1 has fiber degree d") {
    FormalBundle kd = build_kernel_bundle(sc, p);
    KunnethClass kc = decompose(kd.chern_class(1));
    CHECK(kc.base_part == t1);
    CHECK(kc.delta_part(1) == gen(p, "s1_1"));
    CHECK(kc.delta_part(2) == gen(p, "s1_2"));
    CHECK(kc.eta_part == RingElement::constant(p, Rational(sc.d)));
  }
  SUBCASE("recomposition on random products") {
    SplitMix64 rng(7);
    RingElement z = RingElement::zero(p);
    for (int t = 0; t < 8; ++t) {
      int pick = static_cast<int>(rng.next() % p->generator_count());
      z += gen(p, p->generator(pick).name) * Rational(rng.next_coeff(4));
    }
    z = z * z;
    CHECK(decompose(z).recompose() == z);
  }
}

TEST_CASE("fiber integration") {
  Scenario sc = make_scenario(1, 4, 0);
  PresentationPtr p = scenario_ring(sc);
  CHECK(fiber_integrate(gen(p, "eta")) == RingElement::one(p));
  CHECK(fiber_integrate(gen(p, "delta_1")).is_zero());
  CHECK(fiber_integrate(gen(p, "t1") * gen(p, "t1")).is_zero());
  // degree drops by two
  RingElement z = gen(p, "t1") * gen(p, "eta");
  CHECK(fiber_integrate(z) == gen(p, "t1"));
}

TEST_CASE("pushforward of a trivial bundle") {
  for (int g : {0, 1, 2}) {
    PresentationPtr p = make_ring(g, {{"t1", 2}}, 10);
    FormalBundle triv = FormalBundle::trivial(p, 3);
    PushforwardResult pf = grr_pushforward(triv, g, 2);
    CHECK(pf.bundle.rank() == 3 * (1 - g));
    CHECK(pf.rank_formula_check == 3 * (1 - g));
    for (int i = 1; i <= 2; ++i) CHECK(pf.bundle.chern_class(i).is_zero());
  }
}

TEST_CASE("pushforward of a twisted line bundle has binomial classes") {
  // c1 = x + w*eta at genus 1: the direct image is w copies of the line
  // bundle with class x, so c = (1+x)^w.
  auto p = make_ring(1, {{"x", 2}}, 12);
  RingElement x = gen(p, "x");
  RingElement eta = gen(p, "eta");
  const int w = 3;
  FormalBundle line = FormalBundle::line(p, x + eta * Rational(w));
  PushforwardResult pf = grr_pushforward(line, 1, 3);
  CHECK(pf.bundle.rank() == w);
  CHECK(pf.bundle.chern_class(1) == x * Rational(3));
  CHECK(pf.bundle.chern_class(2) == x * x * Rational(3));
  CHECK(pf.bundle.chern_class(3) == x.pow(3));
}

TEST_CASE("scenario pushforward: rank and first class") {
  SUBCASE("genus 1, d = 4, s = 0") {
    Scenario sc = make_scenario(1, 4, 0);
    PresentationPtr p = scenario_ring(sc);
    FormalBundle v = tensor_line(build_kernel_bundle(sc, p),
                                 gen(p, "eta") * Rational(sc.a));
    PushforwardResult pf = grr_pushforward(v, 1, 2);
    CHECK(pf.bundle.rank() == sc.d + 2 * sc.a + 2 * (1 - sc.g));
    CHECK(pf.bundle.is_virtual());
    // (a+d+1-g) t1 - u1 - sum_j s1_j s1_{j+g}; the quadratic term comes from
    // alpha_1^2 = -2*A*eta inside ch_2.
    RingElement want = gen(p, "t1") * Rational(6) - gen(p, "u1") -
                       gen(p, "s1_1") * gen(p, "s1_2");
    CHECK(pf.bundle.chern_class(1) == want);
  }
  SUBCASE("genus 2, d = 8, s = 0") {
    Scenario sc = make_scenario(2, 8, 0);
    PresentationPtr p = scenario_ring(sc);
    FormalBundle v = tensor_line(build_kernel_bundle(sc, p),
                                 gen(p, "eta") * Rational(sc.a));
    PushforwardResult pf = grr_pushforward(v, 2, 3);
    CHECK(pf.bundle.rank() == 2 * sc.d + sc.s + 2 * (1 - sc.g));
    RingElement pairing = gen(p, "s1_1") * gen(p, "s1_3") +
                          gen(p, "s1_2") * gen(p, "s1_4");
    RingElement want =
        gen(p, "t1") * Rational(sc.a + sc.d + 1 - sc.g) - gen(p, "u1") -
        pairing;
    CHECK(pf.bundle.chern_class(1) == want);
  }
}

TEST_CASE("pushforward is additive on direct sums") {
  auto p = make_ring(1, {{"x", 2}}, 12);
  RingElement x = gen(p, "x");
  RingElement eta = gen(p, "eta");
  FormalBundle a = FormalBundle::line(p, x + eta * Rational(2));
  FormalBundle b = FormalBundle::line(p, x * rat(-1) + eta * Rational(5));
  FormalBundle sum = direct_sum(a, b, 4);

  PushforwardResult pa = grr_pushforward(a, 1, 3);
  PushforwardResult pb = grr_pushforward(b, 1, 3);
  PushforwardResult ps = grr_pushforward(sum, 1, 3);
  CHECK(ps.bundle.rank() == pa.bundle.rank() + pb.bundle.rank());
  FormalBundle direct = direct_sum(pa.bundle, pb.bundle, 3);
  for (int i = 1; i <= 3; ++i)
    CHECK(ps.bundle.chern_class(i) == direct.chern_class(i));
}

TEST_CASE("pushforward output is pure base and genus 1 drops the Euler term") {
  Scenario sc = make_scenario(1, 6, 0);
  PresentationPtr p = scenario_ring(sc);
  FormalBundle v = tensor_line(build_kernel_bundle(sc, p),
                               gen(p, "eta") * Rational(sc.a));
  PushforwardResult pf = grr_pushforward(v, 1, 3);
  RingElement ch = chern_character(v, 4);
  RingElement ch_push = chern_character(pf.bundle, 3);
  for (int i = 0; i <= 3; ++i) {
    CHECK(pf.bundle.chern_class(i).is_base_only());
    // at g = 1: ch_i(push) = eta part of ch_{i+1}
    CHECK(ch_push.graded_part(2 * i) ==
          decompose(ch.graded_part(2 * i + 2)).eta_part);
  }
}

TEST_CASE("pushforward needs enough truncation headroom") {
  auto p = make_ring(1, {{"x", 2}}, 6);
  FormalBundle line = FormalBundle::line(p, gen(p, "x"));
  CHECK_THROWS_AS(grr_pushforward(line, 1, 3), TruncationError);
  CHECK_THROWS_AS(grr_pushforward(line, 2, 1), ArgumentError);  // genus lies
}

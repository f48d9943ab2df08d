#include "quotbn/ring.hpp"

#include "quotbn/rng.hpp"

#include "doctest.h"

#include <string>
#include <vector>

using namespace quotbn;

namespace {

RingElement gen(const PresentationPtr& p, const std::string& name) {
  return RingElement::from_generator(p, name);
}

PresentationPtr genus1_ring(int pairing_sign = +1) {
  std::vector<Generator> base{{"t1", 2},   {"t2", 4},   {"u1", 2},
                              {"s1_1", 1}, {"s1_2", 1}, {"s2_1", 3},
                              {"s2_2", 3}};
  return make_ring(1, base, 10, pairing_sign);
}

/// Random element with small support, deterministic per key.
RingElement random_element(const PresentationPtr& p, std::uint64_t key) {
  SplitMix64 rng(key);
  RingElement out = RingElement::zero(p);
  for (int t = 0; t < 3; ++t) {
    Monomial m;
    int prev = -1;
    for (int f = 0; f < 2; ++f) {
      int idx = static_cast<int>(rng.next() % p->generator_count());
      if (idx <= prev) continue;
      int exp = p->generator(idx).odd() ? 1 : 1 + static_cast<int>(rng.next() % 2);
      m.factors.emplace_back(idx, exp);
      prev = idx;
    }
    out += RingElement::from_monomial(p, m, Rational(rng.next_coeff(5)));
  }
  return out;
}

}  // namespace

TEST_CASE("make_ring assembles fiber generators per genus") {
  auto g0 = make_ring(0, {{"t1", 2}}, 8);
  CHECK(g0->generator_count() == 2);  // t1 and eta; no deltas at genus 0
  CHECK(g0->index_of("eta") >= 0);
  CHECK(g0->index_of("delta_1") == -1);

  auto g1 = genus1_ring();
  CHECK(g1->index_of("delta_1") >= 0);
  CHECK(g1->index_of("delta_2") >= 0);
  CHECK(g1->index_of("delta_3") == -1);

  auto g2 = make_ring(2, {{"t1", 2}}, 12);
  for (int j = 1; j <= 4; ++j)
    CHECK(g2->index_of("delta_" + std::to_string(j)) >= 0);
}

TEST_CASE("make_ring rejects bad generator sets") {
  CHECK_THROWS_AS(make_ring(1, {{"t1", 2}, {"t1", 4}}, 8), PresentationError);
  CHECK_THROWS_AS(make_ring(1, {{"eta", 2}}, 8), PresentationError);
  CHECK_THROWS_AS(make_ring(1, {{"delta_9", 1}}, 8), PresentationError);
  CHECK_THROWS_AS(make_ring(1, {{"t1", 2}}, 1), PresentationError);
  CHECK_THROWS_AS(make_ring(-1, {}, 8), PresentationError);
}

TEST_CASE("fiber relations") {
  auto p = make_ring(2, {{"t1", 2}}, 12);
  RingElement eta = gen(p, "eta");
  RingElement d1 = gen(p, "delta_1");
  RingElement d2 = gen(p, "delta_2");
  RingElement d3 = gen(p, "delta_3");
  RingElement d4 = gen(p, "delta_4");

  CHECK((eta * eta).is_zero());
  CHECK((d1 * d1).is_zero());
  CHECK((eta * d1).is_zero());
  CHECK((d1 * d2).is_zero());  // non-conjugate at genus 2
  CHECK(d1 * d3 == eta);       // conjugate pair
  CHECK(d3 * d1 == -eta);
  CHECK(d2 * d4 == eta);
  CHECK((d1 * d4).is_zero());
}

TEST_CASE("alpha1 squared reproduces the pairing relation at genus 1") {
  auto p = genus1_ring();
  RingElement a1 = gen(p, "s1_1") * gen(p, "delta_1") +
                   gen(p, "s1_2") * gen(p, "delta_2");
  RingElement sq = a1 * a1;
  RingElement expected =
      gen(p, "s1_1") * gen(p, "s1_2") * gen(p, "eta") * rat(-2);
  CHECK(sq == expected);

  Monomial m = make_monomial(*p, {{"s1_1", 1}, {"s1_2", 1}, {"eta", 1}});
  CHECK(coeff(sq, m) == rat(-2));
}

TEST_CASE("flipping the pairing sign flips the derived relation") {
  auto p = genus1_ring(-1);
  RingElement a1 = gen(p, "s1_1") * gen(p, "delta_1") +
                   gen(p, "s1_2") * gen(p, "delta_2");
  RingElement plus2 = gen(p, "s1_1") * gen(p, "s1_2") * gen(p, "eta") * rat(2);
  CHECK(a1 * a1 == plus2);  // the -2*A*eta check would now fail
}

TEST_CASE("Koszul sign law on random homogeneous monomials") {
  auto p = genus1_ring();
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial ma, mb;
    int idx_a = static_cast<int>(rng.next() % p->generator_count());
    int idx_b = static_cast<int>(rng.next() % p->generator_count());
    ma.factors.emplace_back(idx_a, 1);
    mb.factors.emplace_back(idx_b, 1);
    if (idx_a == idx_b) continue;
    RingElement a = RingElement::from_monomial(p, ma, Rational(1));
    RingElement b = RingElement::from_monomial(p, mb, Rational(1));
    int da = p->generator(idx_a).degree;
    int db = p->generator(idx_b).degree;
    RingElement lhs = a * b;
    RingElement rhs = b * a;
    if ((da * db) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("product is associative and bilinear on random elements") {
  auto p = genus1_ring();
  for (std::uint64_t k = 0; k < 25; ++k) {
    RingElement a = random_element(p, 3 * k);
    RingElement b = random_element(p, 3 * k + 1);
    RingElement c = random_element(p, 3 * k + 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("normal form is idempotent") {
  auto p = genus1_ring();
  for (std::uint64_t k = 0; k < 20; ++k) {
    RingElement a = random_element(p, 100 + k) * random_element(p, 200 + k);
    CHECK(a * RingElement::one(p) == a);
    CHECK(a + RingElement::zero(p) == a);
  }
}

TEST_CASE("products beyond the truncation degree vanish") {
  auto p = make_ring(0, {{"x", 2}}, 8);
  RingElement x = gen(p, "x");
  CHECK_FALSE(x.pow(4).is_zero());
  CHECK(x.pow(5).is_zero());
}

TEST_CASE("coeff and graded_part basics") {
  auto p = genus1_ring();
  RingElement z = gen(p, "eta") * rat(3) + gen(p, "delta_1");
  CHECK(coeff(z, make_monomial(*p, {{"eta", 1}})) == rat(3));
  CHECK(coeff(RingElement::zero(p), make_monomial(*p, {{"eta", 1}})) == 0);

  RingElement t1 = gen(p, "t1");
  RingElement poly = RingElement::one(p) + t1 + t1 * t1;
  CHECK(graded_part(poly, 2) == t1);
  CHECK(graded_part(gen(p, "eta"), 1).is_zero());

  RingElement together = RingElement::zero(p);
  for (int k = 0; k <= p->truncation(); ++k) together += poly.graded_part(k);
  CHECK(together == poly);
}

TEST_CASE("rendering is canonical") {
  auto p = genus1_ring();
  RingElement z = gen(p, "s1_1") * gen(p, "s1_2") * gen(p, "eta") * rat(-2);
  CHECK(z.str() == "-2*s1_1*s1_2*eta");

  RingElement t1 = gen(p, "t1");
  CHECK((t1 * rat(-6) + gen(p, "u1") +
         gen(p, "s1_1") * gen(p, "s1_2"))
            .str() == "-6*t1 + u1 + s1_1*s1_2");
  CHECK(RingElement::zero(p).str() == "0");
  CHECK(RingElement::constant(p, rat(5, 3)).str() == "5/3");
  CHECK((t1 * t1).str() == "t1^2");
}

TEST_CASE("elements of different presentations do not mix") {
  auto p = genus1_ring();
  auto q = genus1_ring();
  CHECK_THROWS_AS(gen(p, "t1") + gen(q, "t1"), IncompatibleElements);
  CHECK_THROWS_AS(gen(p, "t1") * gen(q, "t1"), IncompatibleElements);
}

TEST_CASE("exp needs positive minimal degree and truncates") {
  auto p = make_ring(0, {{"x", 2}}, 8);
  RingElement x = gen(p, "x");
  RingElement e = x.exp();
  CHECK(e.graded_part(0) == RingElement::one(p));
  CHECK(e.graded_part(4) == x * x * rat(1, 2));
  CHECK(e.graded_part(8) == x.pow(4) * rat(1, 24));
  CHECK_THROWS_AS((RingElement::one(p) + x).exp(), ArgumentError);
}

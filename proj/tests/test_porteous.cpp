#include "quotbn/porteous.hpp"

#include "quotbn/rng.hpp"
#include "quotbn/scenario.hpp"

#include "doctest.h"

#include <vector>

using namespace quotbn;

namespace {

RingElement gen(const PresentationPtr& p, const std::string& name) {
  return RingElement::from_generator(p, name);
}

/// Test oracle: plain recursive cofactor expansion along the first row.
RingElement cofactor_det(const std::vector<std::vector<RingElement>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RingElement acc = RingElement::zero(m[0][0].presentation());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<RingElement>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RingElement> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    RingElement term = m[0][j] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

RingElement random_even(const PresentationPtr& p, std::uint64_t key) {
  SplitMix64 rng(key);
  RingElement t1 = gen(p, "t1");
  RingElement u1 = gen(p, "u1");
  RingElement out = RingElement::constant(p, Rational(rng.next_coeff(4)));
  out += t1 * Rational(rng.next_coeff(4));
  out += u1 * Rational(rng.next_coeff(4));
  out += t1 * u1 * Rational(rng.next_coeff(3));
  return out;
}

PresentationPtr tu_ring() {
  return make_ring(0, {{"t1", 2}, {"u1", 2}}, 16);
}

}  // namespace

TEST_CASE("delta_pq basics") {
  auto p = tu_ring();
  FormalSeries s = FormalSeries::zero(p);
  for (int k = 0; k <= 5; ++k) s.set(k, random_even(p, 40 + k));

  SUBCASE("q = 1 reads the coefficient, for any series") {
    for (int k = 1; k <= 5; ++k) CHECK(delta_pq(s, k, 1) == s.at(k));
  }
  SUBCASE("missing indices read as zero") {
    CHECK(delta_pq(s, 7, 1).is_zero());
    FormalSeries partial = FormalSeries::zero(p);
    partial.set(2, gen(p, "t1"));
    // delta_{2,2} = a2^2 - a1 a3 with a1 = a3 = 0
    CHECK(delta_pq(partial, 2, 2) == gen(p, "t1") * gen(p, "t1"));
  }
  SUBCASE("2x2 closed form") {
    CHECK(delta_pq(s, 2, 2) == s.at(2) * s.at(2) - s.at(1) * s.at(3));
  }
  SUBCASE("3x3 against the cofactor oracle") {
    for (int pp = 2; pp <= 3; ++pp) {
      std::vector<std::vector<RingElement>> m(
          3, std::vector<RingElement>(3, RingElement::zero(p)));
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) m[i - 1][j - 1] = s.at(pp + j - i);
      CHECK(delta_pq(s, pp, 3) == cofactor_det(m));
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(delta_pq(s, 0, 1), ArgumentError);
    CHECK_THROWS_AS(delta_pq(s, 1, 0), ArgumentError);
  }
}

TEST_CASE("determinant rejects odd entries and sees row swaps") {
  auto p = tu_ring();
  SUBCASE("odd entries are rejected for q >= 2") {
    auto ps = make_ring(1, {{"s1_1", 1}, {"s1_2", 1}, {"t1", 2}, {"u1", 2}}, 12);
    FormalSeries s = FormalSeries::zero(ps);
    s.set(1, gen(ps, "s1_1"));  // odd coefficient
    s.set(2, gen(ps, "t1"));
    s.set(3, gen(ps, "u1"));
    CHECK_THROWS_AS(delta_pq(s, 2, 2), ArgumentError);
    CHECK_NOTHROW(delta_pq(s, 1, 1));  // 1x1 is defined regardless
  }
  SUBCASE("alternating in rows") {
    for (std::uint64_t key = 0; key < 10; ++key) {
      std::vector<std::vector<RingElement>> m(
          3, std::vector<RingElement>(3, RingElement::zero(p)));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          m[i][j] = random_even(p, 100 * key + 10 * i + j);
      auto swapped = m;
      std::swap(swapped[0], swapped[2]);
      CHECK(determinant(swapped) == -determinant(m));
      auto scaled = m;
      for (auto& e : scaled[1]) e *= Rational(3);
      CHECK(determinant(scaled) == determinant(m) * Rational(3));
    }
  }
}

TEST_CASE("fundamental class routes") {
  SUBCASE("codimension 1: both routes agree identically") {
    Scenario sc = make_scenario(1, 4, 0);
    StratumReport rep = brill_noether_class(sc);
    REQUIRE(rep.cls.has_value());
    CHECK(rep.cls->agree);
    CHECK(rep.cls->porteous == rep.cls->minus_chern);
    CHECK(rep.cls->difference.is_zero());
  }
  SUBCASE("codimension 2: exact difference is c1^2") {
    Scenario sc = make_scenario(2, 9, 1);
    PresentationPtr p = scenario_ring(sc);
    FormalBundle v = tensor_line(build_kernel_bundle(sc, p),
                                 gen(p, "eta") * Rational(sc.a));
    PushforwardResult pf = grr_pushforward(v, 2, 2);
    FundamentalClass fc = fundamental_class(pf, 2, 1);
    RingElement c1 = pf.bundle.chern_class(1);
    RingElement c2 = pf.bundle.chern_class(2);
    CHECK(fc.porteous == c1 * c1 - c2);
    CHECK(fc.minus_chern == -c2);
    CHECK(fc.difference == c1 * c1);
    CHECK_FALSE(fc.agree);
  }
  SUBCASE("non-positive codimension is rejected") {
    Scenario sc = make_scenario(1, 5, 1);  // 2g-s-1 = 0
    PresentationPtr p = scenario_ring(sc);
    FormalBundle v = tensor_line(build_kernel_bundle(sc, p),
                                 gen(p, "eta") * Rational(sc.a));
    PushforwardResult pf = grr_pushforward(v, 1, 1);
    CHECK_THROWS_AS(fundamental_class(pf, 1, 1), CodimensionError);
  }
}

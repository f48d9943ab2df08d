#include "quotbn/scenario.hpp"

#include <string>

namespace quotbn {

namespace {

RingElement gen(const PresentationPtr& pres, const std::string& name) {
  return RingElement::from_generator(pres, name);
}

}  // namespace

Scenario make_scenario(int g, int d, int s, int truncation) {
  if (g < 1)
    throw ParameterError(
        "genus must be >= 1; genus-0 strata are handled by the "
        "splitting-type lab");
  if (((d - s) % 2 + 2) % 2 != 0)
    throw ParameterError("Segre parity rule violated: require s = d (mod 2), "
                         "got d = " +
                         std::to_string(d) + ", s = " + std::to_string(s));
  Scenario sc;
  sc.g = g;
  sc.d = d;
  sc.s = s;
  sc.a = (d + s) / 2;
  sc.truncation = truncation > 0 ? truncation : default_truncation(g);
  if (sc.truncation < 2)
    throw ParameterError("truncation degree must be >= 2");
  return sc;
}

int expected_codimension(int g, int s) {
  const int direct = 2 * g - s - 1;
  // Corank product from the determinantal description; d cancels, so any
  // value works for the check.
  const int d = 0;
  const int product = ((2 * d - 2 * g + s + 2) - (2 * d + 2 * s - 4 * g + 3)) *
                      ((2 * d + 2 * s - 4 * g + 4) - (2 * d + 2 * s - 4 * g + 3));
  if (direct != product)
    throw InvariantViolation("codimension forms disagree: " +
                             std::to_string(direct) + " vs " +
                             std::to_string(product));
  return direct;
}

DeterminantalDims determinantal_dims(const Scenario& sc) {
  DeterminantalDims out;
  out.fiber_h0_dim = 2 * sc.d + sc.s + sc.m * (1 - sc.g);
  out.source_rank = 2 * sc.d + sc.s + 2 * (1 - sc.g);
  out.target_rank = 2 * sc.d + 2 * sc.s - 4 * sc.g + 4;
  out.large_d_ok = sc.d + sc.s > 2 * sc.m * (sc.g - 1);
  return out;
}

int euler_characteristic(int g, int d) { return d + 2 * (1 - g); }

int h0_threshold(const Scenario& sc) { return sc.d + 3 - 2 * sc.g; }

const char* existence_name(Existence e) {
  switch (e) {
    case Existence::Empty:
      return "Empty";
    case Existence::NonEmpty:
      return "NonEmpty";
    default:
      return "Unknown";
  }
}

ExistenceStatus existence_status(const Scenario& sc) {
  if (sc.s > sc.g) return {Existence::Empty, "segre-above-genus"};
  if (sc.g == 1 && sc.d >= 3 && (sc.s == 0 || sc.s == 1))
    return {Existence::NonEmpty, "elliptic-low-segre"};
  if (sc.s >= 0 && sc.d > 2 * (2 * sc.g - 1))
    return {Existence::NonEmpty, "large-degree"};
  return {Existence::Unknown, "none"};
}

PresentationPtr scenario_ring(const Scenario& sc) {
  std::vector<Generator> base{{"t1", 2}, {"t2", 4}, {"u1", 2}};
  for (int j = 1; j <= 2 * sc.g; ++j)
    base.push_back({"s1_" + std::to_string(j), 1});
  for (int j = 1; j <= 2 * sc.g; ++j)
    base.push_back({"s2_" + std::to_string(j), 3});
  return make_ring(sc.g, base, sc.truncation);
}

RingElement alpha_class(const PresentationPtr& pres, int i) {
  RingElement out = RingElement::zero(pres);
  for (int j = 1; j <= 2 * pres->genus(); ++j)
    out += gen(pres, "s" + std::to_string(i) + "_" + std::to_string(j)) *
           gen(pres, "delta_" + std::to_string(j));
  return out;
}

FormalBundle build_kernel_bundle(const Scenario& sc, PresentationPtr pres) {
  if (!pres) pres = scenario_ring(sc);
  RingElement eta = gen(pres, "eta");
  RingElement c1 = gen(pres, "t1") + alpha_class(pres, 1) + Rational(sc.d) * eta;
  RingElement c2 = gen(pres, "t2") + alpha_class(pres, 2) + gen(pres, "u1") * eta;
  return FormalBundle::make(std::move(pres), 2, {c1, c2});
}

StratumReport basic_report(const Scenario& sc) {
  StratumReport rep;
  rep.sc = sc;
  rep.codim = expected_codimension(sc);
  DeterminantalDims dims = determinantal_dims(sc);
  rep.fiber_h0_dim = dims.fiber_h0_dim;
  rep.target_rank = dims.target_rank;
  rep.large_d_ok = dims.large_d_ok;
  rep.existence = existence_status(sc);

  // Engine-computed rank, independent of the closed forms.
  PresentationPtr pres = scenario_ring(sc);
  FormalBundle v = tensor_line(build_kernel_bundle(sc, pres),
                               Rational(sc.a) * gen(pres, "eta"));
  PushforwardResult pf = grr_pushforward(v, sc.g, 0);
  rep.pushforward_rank = pf.bundle.rank();

  // d + 2a = 2d + s makes the two rank statements coincide.
  if (rep.pushforward_rank != sc.d + 2 * sc.a + 2 * (1 - sc.g) ||
      rep.pushforward_rank != dims.source_rank)
    throw InvariantViolation("pushforward rank disagrees with closed forms");
  return rep;
}

StratumReport brill_noether_class(const Scenario& sc) {
  StratumReport rep = basic_report(sc);
  const int p = rep.codim;
  if (p < 1)
    throw CodimensionError("expected codimension 2g-s-1 = " +
                           std::to_string(p) + " is not positive");

  PresentationPtr pres = scenario_ring(sc);
  RingElement eta = gen(pres, "eta");
  RingElement t1 = gen(pres, "t1");
  RingElement u1 = gen(pres, "u1");
  RingElement alpha1 = alpha_class(pres, 1);

  FormalBundle v =
      tensor_line(build_kernel_bundle(sc, pres), Rational(sc.a) * eta);
  PushforwardResult pf = grr_pushforward(v, sc.g, p);

  // Commonly printed c_1 of the direct image keeps alpha_1 and eta terms that
  // cannot live in base cohomology, and omits the pairing sum forced by
  // alpha_1^2 = -2*A*eta. Report the exact coefficient-level difference.
  RingElement printed_c1 = Rational(sc.a + sc.d + 1 - sc.g) * t1 + alpha1 -
                           u1 +
                           Rational((1 - sc.g) * (sc.d + 2 * sc.a)) * eta;
  RingElement diff_c1 = printed_c1 - pf.bundle.chern_class(1);
  pf.discrepancy_notes.push_back("c1 printed-minus-engine: " + diff_c1.str());

  if (sc.g == 1 && sc.s == -1) {
    // Printed genus-1 expression for the codimension-2 class, with the
    // rank-2 vanishing u2 = 0 substituted.
    RingElement lin = Rational(sc.d + sc.a) * t1 + alpha1 - u1;
    RingElement printed_class = lin * lin * rat(-1, 2) +
                                t1 * t1 * rat(-(sc.d - sc.a), 2) + u1 * t1 +
                                gen(pres, "t2") * rat(-1, 2);
    RingElement engine_class = -pf.bundle.chern_class(2);
    pf.discrepancy_notes.push_back("codim-2 class printed-minus-engine: " +
                                   (printed_class - engine_class).str());
  }

  FundamentalClass fc = fundamental_class(pf, sc.g, sc.s, p);
  rep.cls = ClassRecord{fc.porteous, fc.minus_chern, fc.difference, fc.agree,
                        pf.discrepancy_notes};
  return rep;
}

}  // namespace quotbn

#include "quotbn/jsonio.hpp"

#include <algorithm>

namespace quotbn {

Json element_json(const RingElement& z) {
  const RingPresentation& ring = *z.presentation();
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  for (const auto& term : z.terms()) sorted.push_back(&term);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto* x, const auto* y) {
                     int dx = x->first.degree(ring);
                     int dy = y->first.degree(ring);
                     if (dx != dy) return dx < dy;
                     return x->first < y->first;
                   });
  Json out = Json::array();
  for (const auto* term : sorted) {
    Json mono = Json::array();
    for (const auto& [gen, exp] : term->first.factors)
      mono.push_back({{"gen", ring.generator(gen).name}, {"exp", exp}});
    out.push_back({{"coeff", rational_str(term->second)}, {"monomial", mono}});
  }
  return out;
}

Json bundle_json(const FormalBundle& b) {
  Json chern = Json::array();
  for (const auto& c : b.chern_list()) chern.push_back(c.str());
  return Json{{"rank", b.rank()},
              {"virtual", b.is_virtual()},
              {"chern", chern}};
}

Json pushforward_json(const PushforwardResult& pf) {
  return Json{{"bundle", bundle_json(pf.bundle)},
              {"rank_formula_check", pf.rank_formula_check},
              {"discrepancy_notes", pf.discrepancy_notes}};
}

Json report_json(const StratumReport& rep) {
  Json out;
  out["params"] = Json{{"genus", rep.sc.g},
                       {"degree", rep.sc.d},
                       {"segre", rep.sc.s},
                       {"a", rep.sc.a},
                       {"m", rep.sc.m},
                       {"n", rep.sc.n},
                       {"truncation", rep.sc.truncation}};
  out["codim"] = rep.codim;
  out["ranks"] = Json{{"pushforward", rep.pushforward_rank},
                      {"fiber_h0", rep.fiber_h0_dim},
                      {"target", rep.target_rank},
                      {"large_d_ok", rep.large_d_ok}};
  out["existence"] = Json{{"status", existence_name(rep.existence.status)},
                          {"rule", rep.existence.rule}};
  if (rep.cls) {
    out["class"] = Json{{"porteous", element_json(rep.cls->porteous)},
                        {"minus_chern", element_json(rep.cls->minus_chern)},
                        {"agree", rep.cls->agree},
                        {"difference", element_json(rep.cls->difference)},
                        {"discrepancies", rep.cls->discrepancies}};
  } else {
    out["class"] = nullptr;
  }
  return out;
}

std::string splitting_key(const SplittingType& st) {
  return "(" + std::to_string(st.a) + "," + std::to_string(st.b) + ")";
}

Json survey_json(int d, int trials,
                 const std::map<SplittingType, long>& counts) {
  Json table = Json::object();
  for (const auto& [st, n] : counts) table[splitting_key(st)] = n;
  return Json{{"d", d}, {"trials", trials}, {"counts", table}};
}

Json kernel_json(const KernelMatrix& k) {
  Json entries = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) {
      Json form = Json::array();
      for (const auto& coeff : k.entry[i][c].coeffs)
        form.push_back(rational_str(coeff));
      row.push_back(form);
    }
    entries.push_back(row);
  }
  return Json{{"col_degrees", Json::array({k.col_degrees[0], k.col_degrees[1]})},
              {"entries", entries}};
}

Json stratum_dim_json(int d, int a, const StratumDim& sd) {
  return Json{{"d", d},
              {"a", a},
              {"formula", sd.formula},
              {"lab", sd.lab},
              {"agree", sd.agree}};
}

Json criteria_json(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results)
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"detail", r.detail}});
  return Json{{"criteria", arr}, {"passed", all_passed(results)}};
}

Json ledger_json() {
  Json arr = Json::array();
  for (const auto& e : reference_ledger())
    arr.push_back({{"id", e.id},
                   {"printed", e.printed},
                   {"engine", e.engine},
                   {"note", e.note}});
  return arr;
}

}  // namespace quotbn

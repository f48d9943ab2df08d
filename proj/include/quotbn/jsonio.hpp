#pragma once

#include "quotbn/chern.hpp"
#include "quotbn/genus0.hpp"
#include "quotbn/kunneth.hpp"
#include "quotbn/ledger.hpp"
#include "quotbn/ring.hpp"
#include "quotbn/scenario.hpp"
#include "quotbn/verify.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace quotbn {

// Insertion-ordered JSON keeps key order byte-stable across runs.
using Json = nlohmann::ordered_json;

/// [{coeff: "p/q", monomial: [{gen, exp}...]}...] in canonical term order.
Json element_json(const RingElement& z);

/// {rank, virtual, chern: [rendered elements]}.
Json bundle_json(const FormalBundle& b);

Json pushforward_json(const PushforwardResult& pf);

/// {params, codim, ranks, existence: {status, rule}, class: {porteous,
/// minus_chern, agree, difference, discrepancies}}. Stable field order.
Json report_json(const StratumReport& rep);

/// {d, trials, counts: {"(a,b)": n}}.
Json survey_json(int d, int trials, const std::map<SplittingType, long>& counts);

/// Nested arrays of "p/q" strings with the column degree header.
Json kernel_json(const KernelMatrix& k);

Json stratum_dim_json(int d, int a, const StratumDim& sd);

Json criteria_json(const std::vector<CriterionResult>& results);

Json ledger_json();

std::string splitting_key(const SplittingType& st);

}  // namespace quotbn

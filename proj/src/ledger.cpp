#include "quotbn/ledger.hpp"

namespace quotbn {

const std::vector<LedgerEntry>& reference_ledger() {
  static const std::vector<LedgerEntry> entries = {
      {"ch-cubic-term",
       "ch_3 = (1/3)(c1^3 - 3*c1*c2 + 3*c3)",
       "ch_3 = (1/6)(c1^3 - 3*c1*c2 + 3*c3)",
       "Newton's identities give the cubic term as p_3/3! with "
       "p_3 = c1^3 - 3*c1*c2 + 3*c3; the coefficient 1/3 does not satisfy "
       "the recursion the expansion itself cites."},
      {"pushforward-base-purity",
       "printed direct-image classes keep alpha_1 and eta terms",
       "direct-image classes are pure base classes; fiber generators cannot "
       "survive integration over the curve",
       "exact coefficient-level diffs are attached to every class report"},
      {"pushforward-pairing-term",
       "printed c1 of the direct image has no quadratic s-term",
       "c1 acquires -sum_j s1_j*s1_{j+g} because alpha_1^2 = -2*A*eta "
       "contributes to the eta part of ch_2",
       ""},
      {"rank-two-vanishing",
       "deep printed expansions carry u2, t3 and s3_j terms",
       "a rank-2 kernel forces c_3 = 0, so u2, t3 and s3_j vanish "
       "identically and the generator list stays minimal",
       ""},
      {"balanced-stratum-dimension",
       "expected stratum dimension 3d+2a+5 for every splitting (a, d-a)",
       "direct parameter counting gives 3d+2a+4 at the balanced value "
       "a = d/2 (the open stratum has dimension 4d+4)",
       "stable off-by-one, flagged by `lab dim`, never reinterpreted"},
      {"delta-pairing-sign",
       "the sign of delta_j*delta_{j+g} is left unstated",
       "delta_j*delta_{j+g} = +eta, the unique convention reproducing "
       "alpha_1^2 = -2*A*eta",
       "the opposite choice flips the signs of A, B and gamma together"},
  };
  return entries;
}

}  // namespace quotbn

#pragma once

#include "quotbn/chern.hpp"
#include "quotbn/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace quotbn {

/// Decomposition z = base + sum_j delta_parts[j] * delta_j + eta_part * eta.
/// All three components are free of fiber generators; recomposition is exact.
struct KunnethClass {
  RingElement base_part;
  std::map<int, RingElement> delta_parts;  // only nonzero coefficients stored
  RingElement eta_part;

  RingElement delta_part(int j) const;
  RingElement recompose() const;
};

KunnethClass decompose(const RingElement& z);

/// Integration over the curve fiber: keeps the eta coefficient, kills the
/// base and delta parts; drops degree by 2.
RingElement fiber_integrate(const RingElement& z);

/// Virtual bundle on the base obtained by pushing a bundle on the product
/// down the curve fibration.
struct PushforwardResult {
  FormalBundle bundle;
  int rank_formula_check = 0;  // (1-g)*rank + eta coefficient of c_1
  std::vector<std::string> discrepancy_notes;
};

/// Grothendieck-Riemann-Roch along the fibration, with relative Todd class
/// 1 + (1-g) eta:
///
///   ch_i(push) = (1-g) * base(ch_i) + eta(ch_{i+1}),
///
/// then Chern classes through Newton's identities. Computes c_1..c_N of the
/// result; requires truncation >= 2(N+1) to extract ch_{N+1}.
PushforwardResult grr_pushforward(const FormalBundle& b, int genus, int N);

}  // namespace quotbn

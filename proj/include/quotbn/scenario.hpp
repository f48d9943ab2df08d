#pragma once

#include "quotbn/chern.hpp"
#include "quotbn/kunneth.hpp"
#include "quotbn/porteous.hpp"
#include "quotbn/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quotbn {

/// Validated parameter tuple for a positive-genus stratum: genus g >= 1,
/// degree d, Segre invariant s with s = d (mod 2), twisting degree
/// a = (d+s)/2. The target Grassmannian is fixed at G(2,4) in this release.
struct Scenario {
  int g = 1;
  int d = 0;
  int s = 0;
  int a = 0;
  int m = 2;
  int n = 4;
  int truncation = 0;
};

/// Default ring truncation: everything above is irrelevant to classes of
/// codimension <= 2g-1.
inline int default_truncation(int g) { return 2 * (2 * g + 4); }

Scenario make_scenario(int g, int d, int s, int truncation = -1);

/// 2g-s-1; asserts equality with the expanded determinantal corank product.
int expected_codimension(int g, int s);
inline int expected_codimension(const Scenario& sc) {
  return expected_codimension(sc.g, sc.s);
}

struct DeterminantalDims {
  int fiber_h0_dim = 0;   // 2d+s+m(1-g)
  int source_rank = 0;    // 2d+s+2(1-g)
  int target_rank = 0;    // 2d+2s-4g+4
  bool large_d_ok = false;  // d+s > 2m(g-1)
};
DeterminantalDims determinantal_dims(const Scenario& sc);

/// Riemann-Roch constant d + 2(1-g) for rank-2 quotients.
int euler_characteristic(int g, int d);

/// Section-count threshold d + 3 - 2g in the h^0 reformulation of the
/// stratum condition.
int h0_threshold(const Scenario& sc);

enum class Existence { Empty, NonEmpty, Unknown };

struct ExistenceStatus {
  Existence status = Existence::Unknown;
  std::string rule;  // clause id: which rule decided the status
};

const char* existence_name(Existence e);

/// Tri-state existence per the three classification clauses:
///   (1) s > g: empty;
///   (2) elliptic curve, d >= 3, s in {0,1}: non-empty;
///   (3) g >= s >= 0 and d > 2(2g-1): non-empty;
/// anything else is Unknown, never extrapolated.
ExistenceStatus existence_status(const Scenario& sc);

/// Product-ring presentation with base classes t1, t2, u1, s1_j, s2_j
/// (j = 1..2g) plus the curve fiber classes.
PresentationPtr scenario_ring(const Scenario& sc);

/// sum_j s<i>_j * delta_j over a scenario ring.
RingElement alpha_class(const PresentationPtr& pres, int i);

/// Rank-2 kernel-dual bundle on the product ring:
///   c_1 = t1 + alpha_1 + d*eta,  c_2 = t2 + alpha_2 + u1*eta.
FormalBundle build_kernel_bundle(const Scenario& sc,
                                 PresentationPtr pres = nullptr);

struct ClassRecord {
  RingElement porteous;
  RingElement minus_chern;
  RingElement difference;
  bool agree = false;
  std::vector<std::string> discrepancies;
};

struct StratumReport {
  Scenario sc;
  int codim = 0;
  int pushforward_rank = 0;
  int fiber_h0_dim = 0;
  int target_rank = 0;
  bool large_d_ok = false;
  ExistenceStatus existence;
  std::optional<ClassRecord> cls;  // absent when codim < 1
};

/// Scenario report without the class section. The pushforward rank is
/// engine-computed (depth-0 direct image), not just the closed form.
StratumReport basic_report(const Scenario& sc);

/// Full pipeline: kernel bundle, twist by a*eta, direct image, Porteous /
/// -c_p class pair, and the printed-vs-engine discrepancy notes. Requires
/// codim = 2g-s-1 >= 1.
StratumReport brill_noether_class(const Scenario& sc);

}  // namespace quotbn

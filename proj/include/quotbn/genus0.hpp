#pragma once

#include "quotbn/errors.hpp"
#include "quotbn/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace quotbn {

/// Homogeneous form in two variables: coefficient k multiplies
/// x^k y^{degree-k}. The zero form of any degree is permitted.
struct HomForm {
  int degree = 0;
  std::vector<Rational> coeffs;  // size degree+1

  static HomForm zero(int degree);
  bool is_zero() const;
};

HomForm form_mul(const HomForm& a, const HomForm& b);

/// Degree-d map P^1 -> G(2,4) stored through its kernel inclusion: a 4x2
/// matrix of forms, column j homogeneous of degree col_degrees[j], with
/// col_degrees summing to d.
struct KernelMatrix {
  std::array<int, 2> col_degrees{0, 0};
  std::array<std::array<HomForm, 2>, 4> entry;

  int degree() const { return col_degrees[0] + col_degrees[1]; }
};

/// Quotient presentation: a 2x4 matrix of forms, row j homogeneous of degree
/// row_degrees[j].
struct QuotientMatrix {
  std::array<int, 2> row_degrees{0, 0};
  std::array<std::array<HomForm, 4>, 2> entry;

  int degree() const { return row_degrees[0] + row_degrees[1]; }
};

/// True iff the columns span a subbundle with locally free quotient: the six
/// 2x2 minors have no common projective zero (constant gcd on both affine
/// charts).
bool is_valid_kernel(const KernelMatrix& k);

/// h^0(E_dual(k)): dimension of {w : 1x4 row of degree-k forms, w.K = 0},
/// by exact nullspace computation. k < 0 returns 0.
int twisted_dual_sections(const KernelMatrix& K, int k);

struct SplittingType {
  int a = 0;
  int b = 0;  // a <= b, a + b = d

  bool operator==(const SplittingType& o) const { return a == o.a && b == o.b; }
  bool operator<(const SplittingType& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

/// Detects (a, d-a) as a = min{ k >= 0 : h^0(E_dual(k)) > 0 }; the search is
/// bounded by d/2.
SplittingType splitting_type(const KernelMatrix& K);

/// Kernel of a surjection onto O(a) + O(d-a), found by degreewise exact
/// nullspace search for the two minimal-degree syzygies.
KernelMatrix kernel_of_surjection(const QuotientMatrix& M);

/// h^0(E(m)) by exact linear algebra via the rank-2 identity
/// E = E_dual tensor det(E), i.e. sections of E_dual(d+m).
int h0_twist(const KernelMatrix& K, int m);

/// Asserts h^0(E) - h^1(E) = d + 2, with h^1 summed over the detected
/// splitting summands.
bool euler_check(const KernelMatrix& K);

/// h^0(End E), computed from a section basis of E_dual(d) and the syzygy
/// constraints, not from the splitting shortcut.
int end_sections(const KernelMatrix& K);

struct StratumDim {
  int formula = 0;  // 3d + 2a + 5
  int lab = 0;      // 4(d+2) - h^0(End E)
  bool agree = false;
};

/// Determinantal dimension formula vs direct parameter count for the stratum
/// with splitting (a, d-a). The balanced case a = d/2 disagrees by one; that
/// is reported, not patched.
StratumDim stratum_dimension(int d, int a);

inline constexpr int kResampleBudget = 32;

/// Seeded random valid kernel matrix with balanced column degrees and integer
/// coefficients in [-bound, bound]; resamples invalid draws up to the fixed
/// budget.
KernelMatrix sample_kernel(int d, std::uint64_t seed, int bound = 10);

/// Seeded random surjective quotient matrix with the given row degrees.
QuotientMatrix sample_quotient(int deg_first, int deg_second,
                               std::uint64_t seed, int bound = 10);

/// Exact splitting-type frequency table over `trials` independent seeded
/// draws. Per-trial substreams make the result independent of evaluation
/// order, so parallel jobs merge exactly.
std::map<SplittingType, long> survey(int d, int trials, std::uint64_t seed,
                                     int bound = 10, int jobs = 1);

/// Segre invariant 2a - d of the detected splitting; always <= 0 on P^1.
int segre_p1(const KernelMatrix& K);

}  // namespace quotbn

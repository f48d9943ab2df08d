#pragma once

#include "quotbn/ring.hpp"

#include <vector>

namespace quotbn {

/// Formal bundle over a ring presentation: a rank and a list of Chern classes
/// c_1..c_N, each homogeneous of degree 2i. Virtual bundles (K-theory
/// differences) may carry negative rank and Chern classes beyond the rank;
/// honest bundles may not. Chern roots are never materialized: every
/// operation goes through power sums.
class FormalBundle {
 public:
  static FormalBundle make(PresentationPtr pres, int rank,
                           std::vector<RingElement> chern,
                           bool is_virtual = false);

  /// Trivial bundle of the given rank.
  static FormalBundle trivial(PresentationPtr pres, int rank);

  /// Line bundle with the given first Chern class (homogeneous, degree 2).
  static FormalBundle line(PresentationPtr pres, const RingElement& c1);

  const PresentationPtr& presentation() const { return pres_; }
  int rank() const { return rank_; }
  bool is_virtual() const { return virtual_; }

  /// c_i, with c_0 = 1 and zero beyond the stored depth.
  RingElement chern_class(int i) const;
  int chern_depth() const { return static_cast<int>(chern_.size()); }
  const std::vector<RingElement>& chern_list() const { return chern_; }

 private:
  FormalBundle() = default;

  PresentationPtr pres_;
  int rank_ = 0;
  bool virtual_ = false;
  std::vector<RingElement> chern_;
};

/// Power sums p_1..p_N of the Chern roots, p_k homogeneous of degree 2k.
struct PowerSums {
  std::vector<RingElement> p;  // p[k-1] holds p_k

  const RingElement& at(int k) const { return p[k - 1]; }
  int depth() const { return static_cast<int>(p.size()); }
};

/// Newton's identities, c -> p:
///   p_n - c_1 p_{n-1} + c_2 p_{n-2} - ... + (-1)^n n c_n = 0.
PowerSums power_sums_from_chern(const FormalBundle& b, int N);

/// Inverse direction, p -> c, via n c_n = sum_{r=1}^n (-1)^{r-1} p_r c_{n-r}.
FormalBundle chern_from_power_sums(PresentationPtr pres, int rank,
                                   const PowerSums& p, int N,
                                   bool is_virtual = false);

/// ch = rank + sum_{k<=N} p_k / k!.
RingElement chern_character(const FormalBundle& b, int N);

/// td = exp(sum_k a_k p_k) with sum a_k x^k = log(x / (1 - e^{-x})),
/// truncated to degree 2N. The a_k are produced by exact series
/// manipulation at runtime, so any truncation depth is supported.
RingElement todd(const FormalBundle& b, int N);

/// Twist by a line bundle with first Chern class `ell` (homogeneous of
/// degree 2): ch(result) = ch(b) * exp(ell), rank unchanged.
FormalBundle tensor_line(const FormalBundle& b, const RingElement& ell);

/// Dual bundle: p_k -> (-1)^k p_k.
FormalBundle dual(const FormalBundle& b);

/// Coefficients of 1 / (1 + c_1 t + c_2 t^2 + ...) through t^N; entry [k]
/// is the degree-2k coefficient of t^k.
std::vector<RingElement> inverse_total_chern(const FormalBundle& b, int N);

/// Direct sum realized by adding root data through power sums.
FormalBundle direct_sum(const FormalBundle& a, const FormalBundle& b, int N);

}  // namespace quotbn

#pragma once

#include "quotbn/chern.hpp"
#include "quotbn/kunneth.hpp"
#include "quotbn/ring.hpp"

#include <map>
#include <vector>

namespace quotbn {

/// Formal series sum_k a_k t^k with ring-element coefficients and finite
/// support; missing indices read as zero.
struct FormalSeries {
  PresentationPtr pres;
  std::map<int, RingElement> coeffs;

  static FormalSeries zero(PresentationPtr pres);

  /// 1 + c_1 t + ... + c_N t^N of a bundle.
  static FormalSeries total_chern(const FormalBundle& b, int N);

  /// Termwise inverse of the total Chern series, i.e. c_t of the virtual
  /// negative of the bundle.
  static FormalSeries inverse_total_chern(const FormalBundle& b, int N);

  RingElement at(int k) const;
  FormalSeries& set(int k, RingElement v);
};

/// Division-free determinant (Bird's iteration) over the commutative even
/// part of the ring. Rejects matrices with odd-degree entries, for which the
/// determinant is not defined.
RingElement determinant(const std::vector<std::vector<RingElement>>& m);

/// delta_{p,q}(a) = det( a_{p+j-i} )_{1<=i,j<=q}. q = 1 returns a_p for any
/// series; q >= 2 requires commuting (even) entries.
RingElement delta_pq(const FormalSeries& a, int p, int q);

/// Both determinantal expressions for the stratum class: the Porteous route
/// delta_{p,1}(c_t(-V)) and -c_p(V), with p = 2g-s-1. In the free ring the
/// two can differ for p >= 2; both are returned together with their exact
/// difference.
struct FundamentalClass {
  RingElement porteous;
  RingElement minus_chern;
  RingElement difference;  // porteous - minus_chern
  bool agree = false;
};

FundamentalClass fundamental_class(const PushforwardResult& pf, int g, int s,
                                   int series_depth = -1);

}  // namespace quotbn

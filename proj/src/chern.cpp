#include "quotbn/chern.hpp"

#include <algorithm>

namespace quotbn {

namespace {

void require_same_presentation(const PresentationPtr& a,
                               const PresentationPtr& b) {
  if (!a || !b) throw ArgumentError("null presentation");
  if (a != b)
    throw IncompatibleElements("bundles belong to different presentations");
}

/// Coefficients a_0..a_N of log(x / (1 - e^{-x})).
///
/// (1 - e^{-x})/x has coefficients (-1)^k/(k+1)!; its log is computed by the
/// derivative recurrence k l_k = k f_k - sum_{j<k} j l_j f_{k-j}, and the
/// result is negated.
std::vector<Rational> todd_log_coefficients(int N) {
  std::vector<Rational> f(N + 1);
  for (int k = 0; k <= N; ++k) {
    f[k] = inv_factorial(static_cast<unsigned>(k + 1));
    if (k % 2 == 1) f[k] = -f[k];
  }
  std::vector<Rational> l(N + 1, Rational(0));
  for (int k = 1; k <= N; ++k) {
    Rational acc = Rational(k) * f[k];
    for (int j = 1; j < k; ++j) acc -= Rational(j) * l[j] * f[k - j];
    l[k] = acc / Rational(k);
  }
  for (auto& c : l) c = -c;
  return l;
}

}  // namespace

FormalBundle FormalBundle::make(PresentationPtr pres, int rank,
                                std::vector<RingElement> chern,
                                bool is_virtual) {
  if (!pres) throw ArgumentError("null presentation");
  for (std::size_t i = 0; i < chern.size(); ++i) {
    if (chern[i].presentation() != pres)
      throw IncompatibleElements("Chern class over a foreign presentation");
    int want = 2 * static_cast<int>(i + 1);
    if (want <= pres->truncation() && !chern[i].is_homogeneous(want))
      throw ArgumentError("c_" + std::to_string(i + 1) +
                          " is not homogeneous of degree " +
                          std::to_string(want));
  }
  if (!is_virtual) {
    if (rank < 0)
      throw ArgumentError("non-virtual bundle with negative rank");
    for (std::size_t i = static_cast<std::size_t>(rank); i < chern.size(); ++i)
      if (!chern[i].is_zero())
        throw ArgumentError("non-virtual bundle with c_" +
                            std::to_string(i + 1) + " beyond its rank");
  }
  FormalBundle b;
  b.pres_ = std::move(pres);
  b.rank_ = rank;
  b.virtual_ = is_virtual;
  b.chern_ = std::move(chern);
  return b;
}

FormalBundle FormalBundle::trivial(PresentationPtr pres, int rank) {
  return make(std::move(pres), rank, {});
}

FormalBundle FormalBundle::line(PresentationPtr pres, const RingElement& c1) {
  if (!c1.is_homogeneous(2))
    throw ArgumentError("line bundle c1 must be homogeneous of degree 2");
  return make(std::move(pres), 1, {c1});
}

RingElement FormalBundle::chern_class(int i) const {
  if (i < 0) throw ArgumentError("negative Chern index");
  if (i == 0) return RingElement::one(pres_);
  if (i <= chern_depth()) return chern_[i - 1];
  return RingElement::zero(pres_);
}

PowerSums power_sums_from_chern(const FormalBundle& b, int N) {
  if (N < 0) throw ArgumentError("negative depth");
  if (2 * N > b.presentation()->truncation())
    throw TruncationError("power-sum depth exceeds truncation/2");
  PowerSums out;
  out.p.reserve(N);
  for (int n = 1; n <= N; ++n) {
    RingElement pn = RingElement::zero(b.presentation());
    for (int i = 1; i < n; ++i) {
      RingElement term = b.chern_class(i) * out.at(n - i);
      pn += (i % 2 == 1) ? term : -term;
    }
    RingElement top = b.chern_class(n) * Rational(n);
    pn += (n % 2 == 1) ? top : -top;
    out.p.push_back(std::move(pn));
  }
  return out;
}

FormalBundle chern_from_power_sums(PresentationPtr pres, int rank,
                                   const PowerSums& p, int N,
                                   bool is_virtual) {
  if (N < 0) throw ArgumentError("negative depth");
  if (N > p.depth())
    throw ArgumentError("requested more Chern classes than power sums given");
  std::vector<RingElement> sigma;
  sigma.push_back(RingElement::one(pres));
  for (int n = 1; n <= N; ++n) {
    RingElement acc = RingElement::zero(pres);
    for (int r = 1; r <= n; ++r) {
      RingElement term = p.at(r) * sigma[n - r];
      acc += (r % 2 == 1) ? term : -term;
    }
    acc *= Rational(Integer(1), Integer(n));
    sigma.push_back(std::move(acc));
  }
  sigma.erase(sigma.begin());
  return FormalBundle::make(std::move(pres), rank, std::move(sigma),
                            is_virtual);
}

RingElement chern_character(const FormalBundle& b, int N) {
  PowerSums p = power_sums_from_chern(b, N);
  RingElement ch =
      RingElement::constant(b.presentation(), Rational(b.rank()));
  for (int k = 1; k <= N; ++k)
    ch += p.at(k) * inv_factorial(static_cast<unsigned>(k));
  return ch;
}

RingElement todd(const FormalBundle& b, int N) {
  PowerSums p = power_sums_from_chern(b, N);
  std::vector<Rational> a = todd_log_coefficients(N);
  RingElement w = RingElement::zero(b.presentation());
  for (int k = 1; k <= N; ++k) w += p.at(k) * a[k];
  return truncate_above(w.exp(), 2 * N);
}

FormalBundle tensor_line(const FormalBundle& b, const RingElement& ell) {
  if (ell.presentation() != b.presentation())
    throw IncompatibleElements("twist class over a foreign presentation");
  if (!ell.is_homogeneous(2))
    throw ArgumentError("line twist class must be homogeneous of degree 2");
  const int K = b.presentation()->truncation() / 2;
  RingElement ch = chern_character(b, K) * ell.exp();
  PowerSums p;
  for (int k = 1; k <= K; ++k)
    p.p.push_back(ch.graded_part(2 * k) *
                  Rational(factorial(static_cast<unsigned>(k))));
  return chern_from_power_sums(b.presentation(), b.rank(), p, K,
                               b.is_virtual());
}

FormalBundle dual(const FormalBundle& b) {
  const int N = b.chern_depth();
  PowerSums p = power_sums_from_chern(b, N);
  for (int k = 1; k <= N; ++k)
    if (k % 2 == 1) p.p[k - 1] = -p.p[k - 1];
  return chern_from_power_sums(b.presentation(), b.rank(), p, N,
                               b.is_virtual());
}

std::vector<RingElement> inverse_total_chern(const FormalBundle& b, int N) {
  if (N < 0) throw ArgumentError("negative depth");
  std::vector<RingElement> s;
  s.push_back(RingElement::one(b.presentation()));
  for (int k = 1; k <= N; ++k) {
    RingElement acc = RingElement::zero(b.presentation());
    for (int i = 1; i <= k; ++i) acc += b.chern_class(i) * s[k - i];
    s.push_back(-acc);
  }
  return s;
}

FormalBundle direct_sum(const FormalBundle& a, const FormalBundle& b, int N) {
  require_same_presentation(a.presentation(), b.presentation());
  PowerSums pa = power_sums_from_chern(a, N);
  PowerSums pb = power_sums_from_chern(b, N);
  PowerSums sum;
  for (int k = 1; k <= N; ++k) sum.p.push_back(pa.at(k) + pb.at(k));
  return chern_from_power_sums(a.presentation(), a.rank() + b.rank(), sum, N,
                               a.is_virtual() || b.is_virtual());
}

}  // namespace quotbn

#include "quotbn/porteous.hpp"

#include <string>
#include <utility>

namespace quotbn {

FormalSeries FormalSeries::zero(PresentationPtr pres) {
  if (!pres) throw ArgumentError("null presentation");
  return FormalSeries{std::move(pres), {}};
}

FormalSeries FormalSeries::total_chern(const FormalBundle& b, int N) {
  FormalSeries s = zero(b.presentation());
  s.set(0, RingElement::one(b.presentation()));
  for (int k = 1; k <= N; ++k) s.set(k, b.chern_class(k));
  return s;
}

FormalSeries FormalSeries::inverse_total_chern(const FormalBundle& b, int N) {
  FormalSeries s = zero(b.presentation());
  std::vector<RingElement> inv = quotbn::inverse_total_chern(b, N);
  for (int k = 0; k <= N; ++k) s.set(k, inv[k]);
  return s;
}

RingElement FormalSeries::at(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? RingElement::zero(pres) : it->second;
}

FormalSeries& FormalSeries::set(int k, RingElement v) {
  if (v.presentation() != pres)
    throw IncompatibleElements("series coefficient over a foreign presentation");
  if (v.is_zero())
    coeffs.erase(k);
  else
    coeffs[k] = std::move(v);
  return *this;
}

RingElement determinant(const std::vector<std::vector<RingElement>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ArgumentError("empty matrix");
  PresentationPtr pres = m[0][0].presentation();
  for (const auto& row : m) {
    if (row.size() != n) throw ArgumentError("matrix is not square");
    for (const auto& e : row) {
      if (e.presentation() != pres)
        throw IncompatibleElements("matrix entries over mixed presentations");
      if (!e.is_even())
        throw ArgumentError(
            "determinant undefined: odd-degree (non-commuting) entry");
    }
  }
  if (n == 1) return m[0][0];

  // Bird's division-free iteration: X <- mu(X) * M, n-1 times, where mu
  // zeroes the lower triangle and puts -(trailing diagonal sum) on the
  // diagonal. det = (-1)^{n-1} X[0][0].
  auto x = m;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::vector<std::vector<RingElement>> mu(
        n, std::vector<RingElement>(n, RingElement::zero(pres)));
    RingElement trailing = RingElement::zero(pres);
    for (std::size_t i = n; i-- > 0;) {
      mu[i][i] = -trailing;
      trailing += x[i][i];
      for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = x[i][j];
    }
    std::vector<std::vector<RingElement>> next(
        n, std::vector<RingElement>(n, RingElement::zero(pres)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k) {  // mu is upper triangular
        if (mu[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          next[i][j] += mu[i][k] * m[k][j];
      }
    x = std::move(next);
  }
  return (n % 2 == 1) ? x[0][0] : -x[0][0];
}

RingElement delta_pq(const FormalSeries& a, int p, int q) {
  if (p < 1 || q < 1) throw ArgumentError("delta_pq requires p, q >= 1");
  if (q == 1) return a.at(p);
  std::vector<std::vector<RingElement>> m(
      q, std::vector<RingElement>(q, RingElement::zero(a.pres)));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) m[i - 1][j - 1] = a.at(p + j - i);
  return determinant(m);
}

FundamentalClass fundamental_class(const PushforwardResult& pf, int g, int s,
                                   int series_depth) {
  const int p = 2 * g - s - 1;
  if (p < 1)
    throw CodimensionError(
        "expected codimension 2g-s-1 = " + std::to_string(p) +
        " is not positive; the smallest positive case at fixed twisting line "
        "bundle is s = g-1 (codimension g)");
  if (pf.bundle.chern_depth() < p)
    throw ArgumentError("pushforward carries only " +
                        std::to_string(pf.bundle.chern_depth()) +
                        " Chern classes; c_" + std::to_string(p) +
                        " is required");
  const int depth = series_depth < p ? p : series_depth;
  FormalSeries inv = FormalSeries::inverse_total_chern(pf.bundle, depth);

  FundamentalClass out;
  out.porteous = delta_pq(inv, p, 1);
  out.minus_chern = -pf.bundle.chern_class(p);
  out.difference = out.porteous - out.minus_chern;
  out.agree = out.difference.is_zero();
  return out;
}

}  // namespace quotbn

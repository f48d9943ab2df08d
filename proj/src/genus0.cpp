#include "quotbn/genus0.hpp"

#include "quotbn/linalg.hpp"
#include "quotbn/rng.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <utility>

namespace quotbn {

namespace {

using Poly = std::vector<Rational>;  // univariate, low to high, trimmed

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// Dehomogenizations on the two affine charts.
Poly chart_y(const HomForm& f) { return trim(f.coeffs); }
Poly chart_x(const HomForm& f) {
  Poly p(f.coeffs.rbegin(), f.coeffs.rend());
  return trim(std::move(p));
}

/// True iff the forms have no common projective zero: the gcd on each chart
/// is a nonzero constant. The gcd over the rationals detects common roots
/// over any extension field.
bool forms_coprime(const std::vector<HomForm>& forms) {
  for (auto chart : {&chart_y, &chart_x}) {
    Poly g;
    for (const HomForm& f : forms) g = poly_gcd(std::move(g), chart(f));
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<HomForm> kernel_minors(const KernelMatrix& k) {
  std::vector<HomForm> minors;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      HomForm m = form_mul(k.entry[i][0], k.entry[j][1]);
      HomForm n = form_mul(k.entry[i][1], k.entry[j][0]);
      for (int t = 0; t <= m.degree; ++t) m.coeffs[t] -= n.coeffs[t];
      minors.push_back(std::move(m));
    }
  return minors;
}

std::vector<HomForm> quotient_minors(const QuotientMatrix& m) {
  std::vector<HomForm> minors;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      HomForm a = form_mul(m.entry[0][i], m.entry[1][j]);
      HomForm b = form_mul(m.entry[0][j], m.entry[1][i]);
      for (int t = 0; t <= a.degree; ++t) a.coeffs[t] -= b.coeffs[t];
      minors.push_back(std::move(a));
    }
  return minors;
}

void require_valid(const KernelMatrix& k) {
  if (!is_valid_kernel(k))
    throw ArgumentError(
        "kernel matrix rejected: the 2x2 minors have a common zero, so the "
        "quotient is not locally free");
}

/// Coefficient matrix of { w : 1x4 row of degree-k forms, w.K = 0 }.
/// Unknown (i, u) is the x^u y^{k-u} coefficient of w_i.
QMatrix dual_sections_system(const KernelMatrix& K, int k) {
  const int cols = 4 * (k + 1);
  const int rows = (k + K.col_degrees[0] + 1) + (k + K.col_degrees[1] + 1);
  QMatrix m(rows, cols);
  int row_base = 0;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 4; ++i) {
      const HomForm& f = K.entry[i][c];
      for (int u = 0; u <= k; ++u)
        for (int v = 0; v <= f.degree; ++v)
          m.at(row_base + u + v, i * (k + 1) + u) += f.coeffs[v];
    }
    row_base += k + K.col_degrees[c] + 1;
  }
  return m;
}

std::vector<std::vector<Rational>> dual_sections_basis(const KernelMatrix& K,
                                                       int k) {
  if (k < 0) return {};
  return nullspace(dual_sections_system(K, k));
}

/// Coefficient matrix of { v : column of 4 degree-t forms, M.v = 0 }.
QMatrix syzygy_system(const QuotientMatrix& M, int t) {
  const int cols = 4 * (t + 1);
  const int rows = (M.row_degrees[0] + t + 1) + (M.row_degrees[1] + t + 1);
  QMatrix m(rows, cols);
  int row_base = 0;
  for (int r = 0; r < 2; ++r) {
    for (int i = 0; i < 4; ++i) {
      const HomForm& f = M.entry[r][i];
      for (int u = 0; u <= t; ++u)
        for (int v = 0; v <= f.degree; ++v)
          m.at(row_base + u + v, i * (t + 1) + u) += f.coeffs[v];
    }
    row_base += M.row_degrees[r] + t + 1;
  }
  return m;
}

/// Multiplies a syzygy of degree `from` (4 stacked coefficient blocks) by
/// x^e y^{to-from-e}, producing the coefficient vector at degree `to`.
std::vector<Rational> shift_syzygy(const std::vector<Rational>& v, int from,
                                   int to, int e) {
  std::vector<Rational> out(4 * (to + 1), Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int u = 0; u <= from; ++u)
      out[i * (to + 1) + u + e] = v[i * (from + 1) + u];
  return out;
}

HomForm random_form(int degree, SplitMix64& rng, int bound) {
  HomForm f = HomForm::zero(degree);
  for (auto& c : f.coeffs) c = Rational(rng.next_coeff(bound));
  return f;
}

}  // namespace

HomForm HomForm::zero(int degree) {
  if (degree < 0) throw ArgumentError("negative form degree");
  HomForm f;
  f.degree = degree;
  f.coeffs.assign(degree + 1, Rational(0));
  return f;
}

bool HomForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

HomForm form_mul(const HomForm& a, const HomForm& b) {
  HomForm out = HomForm::zero(a.degree + b.degree);
  for (int i = 0; i <= a.degree; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j <= b.degree; ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

bool is_valid_kernel(const KernelMatrix& k) {
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 4; ++i)
      if (k.entry[i][c].degree != k.col_degrees[c])
        throw ArgumentError("kernel entry degree mismatch");
  return forms_coprime(kernel_minors(k));
}

int twisted_dual_sections(const KernelMatrix& K, int k) {
  require_valid(K);
  if (k < 0) return 0;
  return nullspace_dimension(dual_sections_system(K, k));
}

SplittingType splitting_type(const KernelMatrix& K) {
  require_valid(K);
  const int d = K.degree();
  for (int k = 0; k <= d / 2; ++k)
    if (nullspace_dimension(dual_sections_system(K, k)) > 0)
      return SplittingType{k, d - k};
  throw InvariantViolation(
      "no splitting detected up to d/2; an invalid kernel slipped through");
}

KernelMatrix kernel_of_surjection(const QuotientMatrix& M) {
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < 4; ++i)
      if (M.entry[r][i].degree != M.row_degrees[r])
        throw ArgumentError("quotient entry degree mismatch");
  if (!forms_coprime(quotient_minors(M)))
    throw ArgumentError(
        "quotient matrix rejected: not surjective as a sheaf map (2x2 minors "
        "share a zero)");

  const int d = M.degree();
  int first_degree = -1;
  std::vector<Rational> first;
  for (int t = 0; t <= d; ++t) {
    auto basis = nullspace(syzygy_system(M, t));
    if (first_degree < 0) {
      if (basis.empty()) continue;
      first_degree = t;
      first = basis[0];
    }
    // Second generator: independent of the form multiples of the first.
    const int mult_count = t - first_degree + 1;
    if (static_cast<int>(basis.size()) <= mult_count) continue;
    QMatrix span(mult_count, 4 * (t + 1));
    for (int e = 0; e < mult_count; ++e) {
      auto mv = shift_syzygy(first, first_degree, t, e);
      for (int c = 0; c < 4 * (t + 1); ++c) span.at(e, c) = mv[c];
    }
    const int span_rank = rank(span);
    for (const auto& cand : basis) {
      QMatrix ext(mult_count + 1, 4 * (t + 1));
      for (int e = 0; e < mult_count; ++e) {
        auto mv = shift_syzygy(first, first_degree, t, e);
        for (int c = 0; c < 4 * (t + 1); ++c) ext.at(e, c) = mv[c];
      }
      for (int c = 0; c < 4 * (t + 1); ++c) ext.at(mult_count, c) = cand[c];
      if (rank(std::move(ext)) <= span_rank) continue;

      KernelMatrix K;
      K.col_degrees = {first_degree, t};
      for (int i = 0; i < 4; ++i) {
        HomForm f0 = HomForm::zero(first_degree);
        for (int u = 0; u <= first_degree; ++u)
          f0.coeffs[u] = first[i * (first_degree + 1) + u];
        HomForm f1 = HomForm::zero(t);
        for (int u = 0; u <= t; ++u) f1.coeffs[u] = cand[i * (t + 1) + u];
        K.entry[i][0] = std::move(f0);
        K.entry[i][1] = std::move(f1);
      }
      if (first_degree + t != d || !is_valid_kernel(K))
        throw InvariantViolation("syzygy pair does not present the kernel");
      return K;
    }
  }
  throw InvariantViolation("syzygy degrees exceed the total degree " +
                           std::to_string(d));
}

int h0_twist(const KernelMatrix& K, int m) {
  require_valid(K);
  const int k = K.degree() + m;
  if (k < 0) return 0;
  return nullspace_dimension(dual_sections_system(K, k));
}

bool euler_check(const KernelMatrix& K) {
  SplittingType st = splitting_type(K);
  const int h0 = h0_twist(K, 0);
  const int h1 = std::max(0, -st.a - 1) + std::max(0, -st.b - 1);
  return h0 - h1 == K.degree() + 2;
}

int end_sections(const KernelMatrix& K) {
  require_valid(K);
  const int d = K.degree();
  auto sections = dual_sections_basis(K, d);  // basis of H^0(E), E = E_dual(d)
  const int nsec = static_cast<int>(sections.size());

  // Unknowns x_{i,alpha}: the i-th generator of O^4 maps to
  // sum_alpha x_{i,alpha} * section_alpha. The map factors through E iff it
  // kills both syzygy columns.
  const int cols = 4 * nsec;
  int total_rows = 0;
  for (int c = 0; c < 2; ++c) total_rows += 4 * (d + K.col_degrees[c] + 1);
  QMatrix m(total_rows, cols);

  int row_base = 0;
  for (int c = 0; c < 2; ++c) {
    const int out_deg = d + K.col_degrees[c];
    for (int i = 0; i < 4; ++i) {
      const HomForm& f = K.entry[i][c];
      for (int alpha = 0; alpha < nsec; ++alpha) {
        for (int r = 0; r < 4; ++r) {
          for (int u = 0; u <= d; ++u) {
            const Rational& sc = sections[alpha][r * (d + 1) + u];
            if (sc == 0) continue;
            for (int v = 0; v <= f.degree; ++v)
              m.at(row_base + r * (out_deg + 1) + u + v, i * nsec + alpha) +=
                  f.coeffs[v] * sc;
          }
        }
      }
    }
    row_base += 4 * (out_deg + 1);
  }
  return nullspace_dimension(std::move(m));
}

StratumDim stratum_dimension(int d, int a) {
  if (d < 0 || a < 0 || 2 * a > d)
    throw ArgumentError("stratum dimension requires 0 <= a <= d/2");
  QuotientMatrix M = sample_quotient(
      a, d - a, mix_seed(0x5d1a0b7e9c3f2a41ULL, (d << 8) | a));
  KernelMatrix K = kernel_of_surjection(M);
  SplittingType st = splitting_type(K);
  if (st.a != a || st.b != d - a)
    throw InvariantViolation("constructed quotient has the wrong splitting");

  StratumDim out;
  out.formula = 3 * d + 2 * a + 5;
  out.lab = 4 * (d + 2) - end_sections(K);
  out.agree = out.formula == out.lab;
  return out;
}

KernelMatrix sample_kernel(int d, std::uint64_t seed, int bound) {
  if (d < 0) throw ArgumentError("negative degree");
  if (bound < 1) throw ArgumentError("coefficient bound must be >= 1");
  const int b0 = (d + 1) / 2;
  const int b1 = d / 2;
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    SplitMix64 rng(mix_seed(seed, attempt));
    KernelMatrix K;
    K.col_degrees = {b0, b1};
    for (int i = 0; i < 4; ++i) {
      K.entry[i][0] = random_form(b0, rng, bound);
      K.entry[i][1] = random_form(b1, rng, bound);
    }
    if (is_valid_kernel(K)) return K;
  }
  throw SamplingError("no valid kernel after " +
                      std::to_string(kResampleBudget) + " draws");
}

QuotientMatrix sample_quotient(int deg_first, int deg_second,
                               std::uint64_t seed, int bound) {
  if (deg_first < 0 || deg_second < 0) throw ArgumentError("negative degree");
  if (bound < 1) throw ArgumentError("coefficient bound must be >= 1");
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    SplitMix64 rng(mix_seed(seed, 0x51ULL + attempt));
    QuotientMatrix M;
    M.row_degrees = {deg_first, deg_second};
    for (int i = 0; i < 4; ++i) {
      M.entry[0][i] = random_form(deg_first, rng, bound);
      M.entry[1][i] = random_form(deg_second, rng, bound);
    }
    if (forms_coprime(quotient_minors(M))) return M;
  }
  throw SamplingError("no surjective quotient after " +
                      std::to_string(kResampleBudget) + " draws");
}

std::map<SplittingType, long> survey(int d, int trials, std::uint64_t seed,
                                     int bound, int jobs) {
  if (trials < 0) throw ArgumentError("negative trial count");
  jobs = std::max(1, std::min(jobs, trials == 0 ? 1 : trials));

  auto run_range = [&](int begin, int end, std::map<SplittingType, long>& out) {
    for (int trial = begin; trial < end; ++trial) {
      KernelMatrix K = sample_kernel(d, mix_seed(seed, 0x7251ULL + trial), bound);
      ++out[splitting_type(K)];
    }
  };

  if (jobs == 1) {
    std::map<SplittingType, long> counts;
    run_range(0, trials, counts);
    return counts;
  }

  std::vector<std::map<SplittingType, long>> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  const int chunk = (trials + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    int begin = w * chunk;
    int end = std::min(trials, begin + chunk);
    workers.emplace_back([&, w, begin, end] {
      try {
        run_range(begin, end, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::map<SplittingType, long> counts;
  for (const auto& p : partial)
    for (const auto& [st, n] : p) counts[st] += n;
  return counts;
}

int segre_p1(const KernelMatrix& K) {
  SplittingType st = splitting_type(K);
  return 2 * st.a - K.degree();
}

}  // namespace quotbn

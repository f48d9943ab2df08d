#include "quotbn/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quotbn {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      return false;
  return true;
}

}  // namespace

int RingPresentation::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int RingPresentation::require_index(const std::string& name) const {
  int idx = index_of(name);
  if (idx < 0) throw PresentationError("unknown generator: " + name);
  return idx;
}

PresentationPtr make_ring(int genus, const std::vector<Generator>& base,
                          int truncation, int pairing_sign) {
  if (genus < 0) throw PresentationError("genus must be non-negative");
  if (truncation < 2) throw PresentationError("truncation degree must be >= 2");
  if (pairing_sign != 1 && pairing_sign != -1)
    throw PresentationError("pairing sign must be +1 or -1");

  auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
  ring->genus_ = genus;
  ring->truncation_ = truncation;
  ring->pairing_sign_ = pairing_sign;
  ring->base_count_ = static_cast<int>(base.size());

  for (const Generator& gen : base) {
    if (!valid_name(gen.name))
      throw PresentationError("invalid generator name: '" + gen.name + "'");
    if (gen.degree < 0)
      throw PresentationError("generator degree must be non-negative: " +
                              gen.name);
    if (gen.name == "eta" || gen.name.rfind("delta_", 0) == 0)
      throw PresentationError("reserved name: " + gen.name);
    if (ring->by_name_.count(gen.name))
      throw PresentationError("duplicate generator name: " + gen.name);
    ring->by_name_[gen.name] = static_cast<int>(ring->gens_.size());
    ring->gens_.push_back(gen);
  }
  for (int j = 1; j <= 2 * genus; ++j) {
    Generator d{"delta_" + std::to_string(j), 1};
    ring->by_name_[d.name] = static_cast<int>(ring->gens_.size());
    ring->gens_.push_back(d);
  }
  Generator eta{"eta", 2};
  ring->by_name_[eta.name] = static_cast<int>(ring->gens_.size());
  ring->gens_.push_back(eta);
  return ring;
}

int Monomial::degree(const RingPresentation& ring) const {
  int d = 0;
  for (const auto& [gen, exp] : factors) d += ring.generator(gen).degree * exp;
  return d;
}

Monomial make_monomial(
    const RingPresentation& ring,
    const std::vector<std::pair<std::string, int>>& factors) {
  Monomial m;
  for (const auto& [name, exp] : factors) {
    if (exp == 0) continue;
    if (exp < 0) throw ArgumentError("negative exponent in monomial");
    int idx = ring.require_index(name);
    if (ring.generator(idx).odd() && exp > 1)
      throw ArgumentError("odd generator exponent above 1: " + name);
    m.factors.emplace_back(idx, exp);
  }
  std::sort(m.factors.begin(), m.factors.end());
  for (std::size_t i = 1; i < m.factors.size(); ++i)
    if (m.factors[i - 1].first == m.factors[i].first)
      throw ArgumentError("repeated generator in monomial");
  return m;
}

namespace {

struct Merged {
  Monomial mono;
  int sign = 1;
  bool zero = false;
};

Merged merged_zero() {
  Merged m;
  m.zero = true;
  return m;
}

/// Product of two normal-form monomials: Koszul sign from odd-odd inversions,
/// then the fiber relations, then the truncation cut.
Merged merge_monomials(const RingPresentation& ring, const Monomial& a,
                       const Monomial& b) {
  Merged out;

  long inversions = 0;
  for (const auto& [gb, eb] : b.factors) {
    if (!ring.generator(gb).odd()) continue;
    for (const auto& [ga, ea] : a.factors)
      if (ga > gb && ring.generator(ga).odd()) ++inversions;
  }
  out.sign = (inversions % 2 == 0) ? 1 : -1;

  std::vector<std::pair<int, int>> merged;
  merged.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      merged.push_back(a.factors[i++]);
    } else if (i == a.factors.size() ||
               b.factors[j].first < a.factors[i].first) {
      merged.push_back(b.factors[j++]);
    } else {
      merged.emplace_back(a.factors[i].first,
                          a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    }
  }

  for (const auto& [gen, exp] : merged)
    if (exp >= 2 && ring.generator(gen).odd()) return merged_zero();

  int eta_exp = 0;
  std::vector<int> deltas;  // delta numbers, ascending
  std::vector<std::pair<int, int>> rest;
  for (const auto& [gen, exp] : merged) {
    if (ring.is_eta(gen))
      eta_exp = exp;
    else if (ring.is_delta(gen))
      deltas.push_back(ring.delta_number(gen));
    else
      rest.emplace_back(gen, exp);
  }

  if (eta_exp >= 2) return merged_zero();
  if (eta_exp >= 1 && !deltas.empty()) return merged_zero();
  if (deltas.size() >= 3) return merged_zero();
  if (deltas.size() == 2) {
    if (deltas[1] - deltas[0] != ring.genus()) return merged_zero();
    out.sign *= ring.pairing_sign();
    deltas.clear();
    eta_exp = 1;
  }
  for (int num : deltas) rest.emplace_back(ring.delta_index(num), 1);
  if (eta_exp) rest.emplace_back(ring.eta_index(), 1);
  out.mono.factors = std::move(rest);

  if (out.mono.degree(ring) > ring.truncation()) return merged_zero();
  return out;
}

}  // namespace

RingElement RingElement::zero(PresentationPtr pres) {
  if (!pres) throw ArgumentError("null presentation");
  RingElement e;
  e.pres_ = std::move(pres);
  return e;
}

RingElement RingElement::constant(PresentationPtr pres, const Rational& c) {
  RingElement e = zero(std::move(pres));
  if (c != 0) e.terms_[Monomial{}] = c;
  return e;
}

RingElement RingElement::from_generator(PresentationPtr pres,
                                        const std::string& name) {
  int idx = pres->require_index(name);
  Monomial m;
  m.factors.emplace_back(idx, 1);
  return from_monomial(std::move(pres), std::move(m), Rational(1));
}

RingElement RingElement::from_monomial(PresentationPtr pres, Monomial m,
                                       Rational c) {
  RingElement e = zero(std::move(pres));
  if (c == 0) return e;
  if (m.degree(*e.pres_) > e.pres_->truncation()) return e;
  e.terms_[std::move(m)] = std::move(c);
  return e;
}

Rational RingElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

RingElement RingElement::graded_part(int degree) const {
  if (!pres_) throw ArgumentError("element has no presentation");
  if (degree < 0 || degree > pres_->truncation())
    throw ArgumentError("graded_part degree out of range: " +
                        std::to_string(degree));
  RingElement out = zero(pres_);
  for (const auto& [m, c] : terms_)
    if (m.degree(*pres_) == degree) out.terms_[m] = c;
  return out;
}

int RingElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(*pres_));
  return d;
}

int RingElement::min_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int md = m.degree(*pres_);
    if (d < 0 || md < d) d = md;
  }
  return d;
}

bool RingElement::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (m.degree(*pres_) != degree) return false;
  return true;
}

bool RingElement::is_even() const {
  for (const auto& [m, c] : terms_)
    if (m.degree(*pres_) % 2 != 0) return false;
  return true;
}

bool RingElement::is_base_only() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [gen, exp] : m.factors)
      if (pres_->is_fiber(gen)) return false;
  return true;
}

void RingElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

void RingElement::require_compatible(const RingElement& o) const {
  if (!pres_ || !o.pres_)
    throw IncompatibleElements("element has no presentation");
  if (pres_ != o.pres_)
    throw IncompatibleElements("elements belong to different presentations");
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  prune();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  prune();
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.require_compatible(b);
  RingElement out = RingElement::zero(a.pres_);
  const RingPresentation& ring = *a.pres_;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Merged m = merge_monomials(ring, ma, mb);
      if (m.zero) continue;
      Rational c = ca * cb;
      if (m.sign < 0) c = -c;
      out.terms_[m.mono] += c;
    }
  }
  out.prune();
  return out;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  *this = *this * o;
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

RingElement RingElement::pow(int k) const {
  if (k < 0) throw ArgumentError("negative power");
  RingElement out = one(pres_);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

RingElement RingElement::exp() const {
  if (!pres_) throw ArgumentError("element has no presentation");
  if (!is_zero() && min_degree() < 1)
    throw ArgumentError("exp requires a positive minimal degree");
  RingElement result = one(pres_);
  RingElement term = one(pres_);
  for (int m = 1; m <= pres_->truncation() + 1; ++m) {
    term = term * (*this);
    term *= Rational(Integer(1), Integer(m));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

RingElement truncate_above(const RingElement& z, int cap) {
  RingElement out = RingElement::zero(z.presentation());
  for (int d = 0; d <= std::min(cap, z.presentation()->truncation()); ++d)
    out += z.graded_part(d);
  return out;
}

std::string RingElement::str() const {
  if (is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& term : terms_) sorted.push_back(&term);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto* x, const auto* y) {
                     int dx = x->first.degree(*pres_);
                     int dy = y->first.degree(*pres_);
                     if (dx != dy) return dx < dy;
                     return x->first < y->first;
                   });

  auto mono_str = [&](const Monomial& m) {
    std::string s;
    for (const auto& [gen, exp] : m.factors) {
      if (!s.empty()) s += "*";
      s += pres_->generator(gen).name;
      if (exp > 1) s += "^" + std::to_string(exp);
    }
    return s;
  };
  auto term_str = [&](const Rational& abs_c, const Monomial& m) {
    if (m.is_unit()) return rational_str(abs_c);
    if (abs_c == 1) return mono_str(m);
    return rational_str(abs_c) + "*" + mono_str(m);
  };

  std::ostringstream os;
  bool first = true;
  for (const auto* term : sorted) {
    const Rational& c = term->second;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      os << term_str(a, term->first);
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ") << term_str(a, term->first);
    }
  }
  return os.str();
}

}  // namespace quotbn

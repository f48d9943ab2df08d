#pragma once

#include "quotbn/errors.hpp"
#include "quotbn/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quotbn {

/// A named generator with a cohomological degree. Parity is the degree mod 2.
struct Generator {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
};

class RingPresentation;
using PresentationPtr = std::shared_ptr<const RingPresentation>;

/// Free graded-supercommutative algebra on user-named base generators,
/// tensored with the cohomology of a genus-g curve fiber:
///
///   eta        even, degree 2 (point class),
///   delta_1 .. delta_2g  odd, degree 1,
///
/// subject to eta^2 = 0, eta*delta_j = 0, delta_j*delta_k = 0 for |j-k| != g
/// and delta_j*delta_{j+g} = pairing_sign * eta for 1 <= j <= g. Monomials of
/// total degree above `truncation` are identically zero.
///
/// Canonical monomial order: base generators in declaration order, then the
/// deltas, then eta last. Presentations are immutable and freely shared.
class RingPresentation {
 public:
  int genus() const { return genus_; }
  int truncation() const { return truncation_; }
  int pairing_sign() const { return pairing_sign_; }

  int generator_count() const { return static_cast<int>(gens_.size()); }
  int base_count() const { return base_count_; }
  const Generator& generator(int index) const { return gens_[index]; }

  /// Index of a generator by name, -1 when absent.
  int index_of(const std::string& name) const;
  int require_index(const std::string& name) const;

  int delta_index(int j) const { return base_count_ + (j - 1); }  // j in 1..2g
  int eta_index() const { return base_count_ + 2 * genus_; }

  bool is_delta(int index) const {
    return index >= base_count_ && index < eta_index();
  }
  bool is_eta(int index) const { return index == eta_index(); }
  bool is_fiber(int index) const { return index >= base_count_; }
  int delta_number(int index) const { return index - base_count_ + 1; }

 private:
  friend PresentationPtr make_ring(int, const std::vector<Generator>&, int,
                                   int);
  RingPresentation() = default;

  int genus_ = 0;
  int truncation_ = 0;
  int pairing_sign_ = 1;
  int base_count_ = 0;
  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> by_name_;
};

/// Builds a presentation: the given base generators plus delta_1..delta_2g
/// and eta. Base names may not collide with the reserved fiber names.
PresentationPtr make_ring(int genus, const std::vector<Generator>& base,
                          int truncation, int pairing_sign = +1);

/// Exponent word sorted by generator index; odd generators carry exponent 1.
/// A monomial in normal form has at most one fiber factor (a single delta or
/// a single eta).
struct Monomial {
  std::vector<std::pair<int, int>> factors;  // (generator index, exponent)

  bool is_unit() const { return factors.empty(); }
  int degree(const RingPresentation& ring) const;

  bool operator==(const Monomial& o) const { return factors == o.factors; }
  bool operator<(const Monomial& o) const { return factors < o.factors; }
};

/// Builds a normal-form monomial from unordered (name, exponent) pairs. The
/// input is taken as the positively oriented word; factors are sorted into
/// canonical order without sign bookkeeping.
Monomial make_monomial(const RingPresentation& ring,
                       const std::vector<std::pair<std::string, int>>& factors);

/// Sparse exact-rational combination of normal-form monomials. Values are
/// immutable; every operation returns a fresh element in normal form.
class RingElement {
 public:
  RingElement() = default;

  static RingElement zero(PresentationPtr pres);
  static RingElement constant(PresentationPtr pres, const Rational& c);
  static RingElement one(PresentationPtr pres) {
    return constant(std::move(pres), Rational(1));
  }
  static RingElement from_generator(PresentationPtr pres,
                                    const std::string& name);
  static RingElement from_monomial(PresentationPtr pres, Monomial m,
                                   Rational c);

  const PresentationPtr& presentation() const { return pres_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial{}); }

  RingElement graded_part(int degree) const;
  int max_degree() const;  // -1 for the zero element
  int min_degree() const;
  bool is_homogeneous(int degree) const;
  bool is_even() const;
  bool is_base_only() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  RingElement& operator*=(const Rational& c);

  RingElement pow(int k) const;

  /// Exponential series; terminates because the argument must have positive
  /// minimal degree and the ring is truncated.
  RingElement exp() const;

  /// Canonical text: terms sorted by (degree, monomial order), reduced
  /// fraction coefficients, e.g. "-2*s1_1*s1_2*eta".
  std::string str() const;

  friend RingElement operator+(RingElement a, const RingElement& b) {
    a += b;
    return a;
  }
  friend RingElement operator-(RingElement a, const RingElement& b) {
    a -= b;
    return a;
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const Rational& c) {
    a *= c;
    return a;
  }
  friend RingElement operator*(const Rational& c, RingElement a) {
    a *= c;
    return a;
  }
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

 private:
  void prune();
  void require_compatible(const RingElement& o) const;

  PresentationPtr pres_;
  std::map<Monomial, Rational> terms_;
};

// Spec-facing free functions.
inline RingElement mul(const RingElement& a, const RingElement& b) {
  return a * b;
}
inline Rational coeff(const RingElement& z, const Monomial& m) {
  return z.coeff(m);
}
inline RingElement graded_part(const RingElement& z, int degree) {
  return z.graded_part(degree);
}

/// Sum of the graded parts of degree <= cap.
RingElement truncate_above(const RingElement& z, int cap);

}  // namespace quotbn

#include "quotbn/kunneth.hpp"

#include <string>

namespace quotbn {

RingElement KunnethClass::delta_part(int j) const {
  auto it = delta_parts.find(j);
  if (it != delta_parts.end()) return it->second;
  return RingElement::zero(base_part.presentation());
}

RingElement KunnethClass::recompose() const {
  const PresentationPtr& pres = base_part.presentation();
  RingElement out = base_part;
  for (const auto& [j, b] : delta_parts)
    out += b * RingElement::from_generator(pres, "delta_" + std::to_string(j));
  out += eta_part * RingElement::from_generator(pres, "eta");
  return out;
}

KunnethClass decompose(const RingElement& z) {
  const PresentationPtr& pres = z.presentation();
  if (!pres) throw ArgumentError("element has no presentation");
  const RingPresentation& ring = *pres;

  KunnethClass out;
  out.base_part = RingElement::zero(pres);
  out.eta_part = RingElement::zero(pres);

  for (const auto& [m, c] : z.terms()) {
    // Normal form puts the (unique) fiber factor last.
    if (!m.factors.empty() && ring.is_fiber(m.factors.back().first)) {
      Monomial stripped = m;
      int gen = stripped.factors.back().first;
      stripped.factors.pop_back();
      RingElement piece = RingElement::from_monomial(pres, stripped, c);
      if (ring.is_eta(gen)) {
        out.eta_part += piece;
      } else {
        int j = ring.delta_number(gen);
        auto it = out.delta_parts.find(j);
        if (it == out.delta_parts.end())
          out.delta_parts.emplace(j, piece);
        else
          it->second += piece;
      }
    } else {
      out.base_part += RingElement::from_monomial(pres, m, c);
    }
  }
  for (auto it = out.delta_parts.begin(); it != out.delta_parts.end();)
    it = it->second.is_zero() ? out.delta_parts.erase(it) : std::next(it);
  return out;
}

RingElement fiber_integrate(const RingElement& z) {
  return decompose(z).eta_part;
}

PushforwardResult grr_pushforward(const FormalBundle& b, int genus, int N) {
  const PresentationPtr& pres = b.presentation();
  if (pres->genus() != genus)
    throw ArgumentError("genus mismatch: presentation has genus " +
                        std::to_string(pres->genus()));
  if (N < 0) throw ArgumentError("negative depth");
  if (pres->truncation() < 2 * (N + 1))
    throw TruncationError(
        "truncation " + std::to_string(pres->truncation()) +
        " too small to extract ch_" + std::to_string(N + 1) + "; need " +
        std::to_string(2 * (N + 1)));

  RingElement ch = chern_character(b, N + 1);
  std::vector<KunnethClass> dec;
  dec.reserve(N + 2);
  for (int i = 0; i <= N + 1; ++i) dec.push_back(decompose(ch.graded_part(2 * i)));

  const Rational euler_factor(1 - genus);
  std::vector<RingElement> ch_push;
  ch_push.reserve(N + 1);
  for (int i = 0; i <= N; ++i)
    ch_push.push_back(dec[i].base_part * euler_factor + dec[i + 1].eta_part);

  Rational rank_rat = ch_push[0].constant_term();
  if (!is_integer(rank_rat))
    throw ArgumentError("pushforward rank is not an integer: " +
                        rational_str(rank_rat));
  int rank = static_cast<int>(to_long(rank_rat));

  Rational fiber_deg = dec[1].eta_part.constant_term();
  if (!is_integer(fiber_deg))
    throw ArgumentError("fiber degree of c_1 is not an integer: " +
                        rational_str(fiber_deg));
  int closed_form =
      (1 - genus) * b.rank() + static_cast<int>(to_long(fiber_deg));
  if (rank != closed_form)
    throw InvariantViolation("pushforward rank mismatch: ch_0 gives " +
                             std::to_string(rank) + ", closed form gives " +
                             std::to_string(closed_form));

  PowerSums p;
  for (int k = 1; k <= N; ++k)
    p.p.push_back(ch_push[k] * Rational(factorial(static_cast<unsigned>(k))));
  FormalBundle push =
      chern_from_power_sums(pres, rank, p, N, /*is_virtual=*/true);

  for (int i = 1; i <= N; ++i)
    if (!push.chern_class(i).is_base_only())
      throw InvariantViolation("fiber generator leaked into pushforward c_" +
                               std::to_string(i));

  PushforwardResult out{std::move(push), closed_form, {}};
  return out;
}

}  // namespace quotbn

#pragma once

// Conversion of a contact r-surgery on a Legendrian unknot into a sequence of
// contact (+-1)-surgeries on a chain of push-offs, and the linking data of the
// resulting link.
//
// Conventions:
//   [c1, ..., cn] = c1 - 1/(c2 - 1/(... - 1/cn)).
//   r < 0 is written r = [a1 + 1, a2, ..., an] with every ai <= -2. The first
//   chain knot is stabilized |a1 + 2| times, each later one is a push-off of its
//   predecessor stabilized |ai + 2| times; all carry contact -1.
//   r > 0 first puts contact +1 on K and continues with 1/r' = 1/r - 1 on an
//   unstabilized push-off, repeating while r' > 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contactkirby/errors.hpp"
#include "contactkirby/exact.hpp"
#include "contactkirby/legendrian.hpp"

namespace contactkirby {

/// Negative continued fraction coefficients, each <= -2.
struct CFExpansion {
  std::vector<std::int64_t> coeffs;

  /// Total number of zigzags the chain carries: sum |ai + 2|.
  std::int64_t stabilizations() const {
    std::int64_t s = 0;
    for (auto a : coeffs) s += -(a + 2);
    return s;
  }

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

inline Rational evaluate_cf(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) throw InvalidExpansion("empty continued fraction");
  Rational x(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (x == Rational()) throw InvalidExpansion("zero denominator while evaluating continued fraction");
    x = Rational(coeffs[i]) - Rational(1) / x;
  }
  return x;
}

inline CFExpansion expand_negative(const Rational& r) {
  if (r.sign() >= 0) throw InvalidInput("expansion needs a negative coefficient (got " + r.str() + ")");
  CFExpansion out;
  Rational x = r;
  for (;;) {
    BigInt c = x.floor();
    out.coeffs.push_back(to_int64(c));
    if (x.is_integer()) break;
    x = Rational(1) / (Rational(c) - x);
  }
  out.coeffs.front() -= 1;
  return out;
}

struct Component {
  std::size_t index = 0;
  LegendrianUnknot knot;
  Sign contact_sign = Sign::minus;
  std::optional<std::size_t> parent;
  std::int64_t stabs_pos = 0;
  std::int64_t stabs_neg = 0;

  std::int64_t topological_coeff() const { return knot.tb() + value(contact_sign); }
};

struct Presentation {
  LegendrianUnknot source_knot;
  Rational source_coefficient;
  std::vector<Component> components;
  std::vector<Sign> sign_choice;

  std::string signs_string() const {
    std::string s;
    for (auto sign : sign_choice) s += symbol(sign);
    return s;
  }
};

namespace detail {

// Layout of a conversion before stabilization signs are chosen.
struct ConversionPlan {
  std::size_t plus_count = 0;              // +1 components: K and unstabilized push-offs
  std::vector<std::int64_t> chain_stabs;   // zigzags per -1 component, in chain order
  std::int64_t stabilizations = 0;
};

inline ConversionPlan plan_conversion(const Rational& r) {
  if (r == Rational()) throw ZeroSurgery();
  ConversionPlan plan;
  Rational x = r;
  while (x.sign() > 0) {
    ++plan.plus_count;
    if (x == Rational(1)) return plan;
    x = x / (Rational(1) - x);
  }
  for (auto a : expand_negative(x).coeffs) {
    plan.chain_stabs.push_back(-(a + 2));
    plan.stabilizations += -(a + 2);
  }
  return plan;
}

}  // namespace detail

/// Number of zigzags (and so the length of a sign vector) a conversion needs.
inline std::int64_t stabilization_count(const Rational& r) {
  return detail::plan_conversion(r).stabilizations;
}

inline Presentation convert(const LegendrianUnknot& k, const Rational& r,
                            std::span<const Sign> signs) {
  auto plan = detail::plan_conversion(r);
  if (static_cast<std::int64_t>(signs.size()) != plan.stabilizations)
    throw InvalidInput("expected " + std::to_string(plan.stabilizations) +
                       " stabilization signs, got " + std::to_string(signs.size()));

  Presentation p{k, r, {}, {signs.begin(), signs.end()}};
  auto add = [&](LegendrianUnknot knot, Sign contact, std::optional<std::size_t> parent) {
    p.components.push_back({p.components.size(), knot, contact, parent, 0, 0});
    return &p.components.back();
  };

  for (std::size_t i = 0; i < plan.plus_count; ++i) {
    std::optional<std::size_t> parent;
    if (i > 0) parent = i - 1;
    add(k, Sign::plus, parent);
  }
  std::size_t next_sign = 0;
  for (auto stabs : plan.chain_stabs) {
    std::optional<std::size_t> parent;
    LegendrianUnknot base = k;
    if (!p.components.empty()) {
      parent = p.components.size() - 1;
      base = p.components.back().knot;
    }
    Component* c = add(base, Sign::minus, parent);
    for (std::int64_t s = 0; s < stabs; ++s) {
      Sign sign = signs[next_sign++];
      c->knot = stabilize(c->knot, sign);
      (sign == Sign::plus ? c->stabs_pos : c->stabs_neg) += 1;
    }
  }
  return p;
}

/// Upper bound on zigzags for full sign enumeration (2^s presentations).
inline constexpr std::int64_t kMaxEnumeratedStabilizations = 20;

/// Every presentation of the surgery, one per sign vector, '+' before '-'
/// in lexicographic order.
inline std::vector<Presentation> enumerate_presentations(const LegendrianUnknot& k,
                                                         const Rational& r) {
  const std::int64_t s = stabilization_count(r);
  if (s > kMaxEnumeratedStabilizations)
    throw InvalidInput("too many stabilizations to enumerate (" + std::to_string(s) + ")");
  std::vector<Presentation> out;
  const std::uint64_t total = std::uint64_t{1} << s;
  out.reserve(total);
  std::vector<Sign> signs(static_cast<std::size_t>(s));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::int64_t i = 0; i < s; ++i)
      signs[i] = ((bits >> (s - 1 - i)) & 1) ? Sign::minus : Sign::plus;
    out.push_back(convert(k, r, signs));
  }
  return out;
}

/// Linking number of two distinct components. A push-off links its parent
/// tb(parent) times and links everything else as its parent does.
inline std::int64_t component_linking(const Presentation& p, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const auto& younger = p.components.at(j);
  if (!younger.parent) return 0;
  if (*younger.parent == i) return p.components[i].knot.tb();
  return component_linking(p, i, *younger.parent);
}

inline IntMatrix linking_matrix(const Presentation& p) {
  const std::size_t n = p.components.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = p.components[i].topological_coeff();
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = component_linking(p, i, j);
  }
  return m;
}

/// Every component is parallel to the original knot, so each links the
/// external knot as the original does.
inline IntVector linking_vector(const Presentation& p, const ExternalKnot& ext) {
  return IntVector(p.components.size(), BigInt(ext.lk_with_original));
}

inline IntVector rot_vector(const Presentation& p) {
  IntVector v;
  v.reserve(p.components.size());
  for (const auto& c : p.components) v.emplace_back(c.knot.rot());
  return v;
}

/// Orientation reversal of the whole diagram: rot negated, zigzag signs flipped.
inline Presentation mirror(const Presentation& p) {
  Presentation out = p;
  out.source_knot = p.source_knot.mirror();
  for (auto& c : out.components) {
    c.knot = c.knot.mirror();
    std::swap(c.stabs_pos, c.stabs_neg);
  }
  for (auto& s : out.sign_choice) s = flip(s);
  return out;
}

}  // namespace contactkirby

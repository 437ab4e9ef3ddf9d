#pragma once

// Legendrian unknots in the standard tight 3-sphere, classified by their
// classical invariants (tb, rot), together with framing curves on the
// boundary torus of a standard neighbourhood.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "contactkirby/errors.hpp"
#include "contactkirby/exact.hpp"

namespace contactkirby {

/// Orientation of a stabilization zigzag, or the sign of a +-1 surgery.
enum class Sign : int { minus = -1, plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

class LegendrianUnknot {
 public:
  /// Checks the three realizability conditions and names the first that fails:
  /// tb <= -1, tb + |rot| <= -1, rot = tb + 1 (mod 2).
  static LegendrianUnknot validate(std::int64_t tb, std::int64_t rot) {
    if (tb > -1)
      throw InvalidLegendrian("tb must be negative (got tb=" + std::to_string(tb) + ")");
    if (tb + std::abs(rot) > -1)
      throw InvalidLegendrian("Bennequin bound tb + |rot| <= -1 fails (tb=" +
                              std::to_string(tb) + ", rot=" + std::to_string(rot) + ")");
    if ((rot - tb - 1) % 2 != 0)
      throw InvalidLegendrian("parity rot = tb + 1 (mod 2) fails (tb=" + std::to_string(tb) +
                              ", rot=" + std::to_string(rot) + ")");
    return LegendrianUnknot(tb, rot);
  }

  std::int64_t tb() const { return tb_; }
  std::int64_t rot() const { return rot_; }

  /// Same knot with reversed orientation (rot -> -rot).
  LegendrianUnknot mirror() const { return LegendrianUnknot(tb_, -rot_); }

  friend bool operator==(const LegendrianUnknot&, const LegendrianUnknot&) = default;

 private:
  LegendrianUnknot(std::int64_t tb, std::int64_t rot) : tb_(tb), rot_(rot) {}

  std::int64_t tb_;
  std::int64_t rot_;
};

inline LegendrianUnknot validate_unknot(std::int64_t tb, std::int64_t rot) {
  return LegendrianUnknot::validate(tb, rot);
}

/// Adds one zigzag: tb drops by one, rot moves by the sign.
inline LegendrianUnknot stabilize(const LegendrianUnknot& k, Sign sign) {
  return LegendrianUnknot::validate(k.tb() - 1, k.rot() + value(sign));
}

/// Curve lambda_coeff * lambda + mu_coeff * mu on the boundary torus, in the
/// Seifert longitude / meridian basis.
struct FramingCurve {
  std::int64_t lambda_coeff = 1;
  std::int64_t mu_coeff = 0;

  friend bool operator==(const FramingCurve&, const FramingCurve&) = default;
};

/// lambda_c = lambda + tb * mu.
inline FramingCurve contact_longitude(const LegendrianUnknot& k) { return {1, k.tb()}; }

/// The contact framing-n curve lambda_c + n mu = lambda + (n + tb) mu.
inline FramingCurve contact_framing_curve(const LegendrianUnknot& k, const Rational& n) {
  if (!n.is_integer())
    throw UnsupportedFraming("framing curve needs an integral contact coefficient (got " +
                             n.str() + ")");
  return {1, to_int64(n.num()) + k.tb()};
}

/// Converts a contact surgery coefficient to the Seifert-longitude one.
inline Rational topological_coefficient(const LegendrianUnknot& k, const Rational& r) {
  return r + Rational(k.tb());
}

/// For tb = -m: +1 when n = m + 1, -1 when n = m - 1, nothing otherwise.
inline std::optional<Sign> kirby_topological_condition(std::int64_t m, std::int64_t n) {
  if (n - m == 1) return Sign::plus;
  if (n - m == -1) return Sign::minus;
  return std::nullopt;
}

/// A Legendrian unknot in the complement of a surgery diagram, with its
/// linking number against the original surgery knot.
struct ExternalKnot {
  LegendrianUnknot knot;
  std::int64_t lk_with_original = 0;

  ExternalKnot mirror() const { return {knot.mirror(), lk_with_original}; }
};

}  // namespace contactkirby

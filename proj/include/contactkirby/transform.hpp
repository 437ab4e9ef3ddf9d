#pragma once

// Classical invariants of a Legendrian knot in the complement of a contact
// (+-1)-surgery link, read off in the surgered manifold:
//
//   tb_new  = tb(K0)  - <L, M^-1 L>
//   rot_new = rot(K0) - <C, M^-1 L>
//
// M is the linking matrix, L the linking numbers of K0 with the components and
// C their rotation numbers.

#include <cstdint>
#include <cstdlib>
#include <string>

#include "contactkirby/errors.hpp"
#include "contactkirby/exact.hpp"
#include "contactkirby/legendrian.hpp"
#include "contactkirby/presentation.hpp"

namespace contactkirby {

/// A transformed invariant that is not an integer; carries the exact value.
class NonIntegralInvariant : public Error {
 public:
  NonIntegralInvariant(const std::string& what, Rational value)
      : Error(what + " is not integral: " + value.str()), value_(std::move(value)) {}

  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

struct PostSurgeryInvariants {
  std::int64_t tb_new = 0;
  std::int64_t rot_new = 0;
  bool integral = true;
};

struct BennequinVerdict {
  bool satisfied = true;
  std::int64_t slack = 0;  // -1 - tb - |rot|
};

namespace detail {

inline std::int64_t require_integral(const Rational& value, const char* what) {
  if (!value.is_integer()) throw NonIntegralInvariant(what, value);
  return to_int64(value.num());
}

// M^-1 L, or throws SingularMatrix.
inline RationalVector solve_linking(const Presentation& p, const ExternalKnot& ext) {
  return multiply(invert(linking_matrix(p)), linking_vector(p, ext));
}

}  // namespace detail

inline Rational rot_after_surgery_exact(const Presentation& p, const ExternalKnot& ext) {
  return Rational(ext.knot.rot()) - inner(rot_vector(p), detail::solve_linking(p, ext));
}

inline Rational tb_after_surgery_exact(const Presentation& p, const ExternalKnot& ext) {
  return Rational(ext.knot.tb()) - inner(linking_vector(p, ext), detail::solve_linking(p, ext));
}

inline std::int64_t rot_after_surgery(const Presentation& p, const ExternalKnot& ext) {
  return detail::require_integral(rot_after_surgery_exact(p, ext), "rot_new");
}

inline std::int64_t tb_after_surgery(const Presentation& p, const ExternalKnot& ext) {
  return detail::require_integral(tb_after_surgery_exact(p, ext), "tb_new");
}

/// Both invariants from a single inversion.
inline PostSurgeryInvariants invariants_after_surgery(const Presentation& p,
                                                      const ExternalKnot& ext) {
  auto w = detail::solve_linking(p, ext);
  Rational tb = Rational(ext.knot.tb()) - inner(linking_vector(p, ext), w);
  Rational rot = Rational(ext.knot.rot()) - inner(rot_vector(p), w);
  return {detail::require_integral(tb, "tb_new"), detail::require_integral(rot, "rot_new"), true};
}

/// tb of a framing unknot after topological (+-1)-surgery on the knot it
/// frames: drops by one for +1, rises by one for -1.
inline std::int64_t lemma_tb_shift(Sign topological_sign, std::int64_t tb0) {
  return tb0 - value(topological_sign);
}

inline BennequinVerdict bennequin(std::int64_t tb, std::int64_t rot) {
  std::int64_t slack = -1 - tb - std::abs(rot);
  return {slack >= 0, slack};
}

}  // namespace contactkirby

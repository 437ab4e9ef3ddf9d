#pragma once

// Screening of single-unknot contact surgery diagrams as candidates for a
// contact version of the Kirby move of type 1 (adding or deleting a
// (+-1)-framed unknot).
//
// A candidate is a Legendrian unknot K with tb(K) = -m carrying contact
// framing n >= 0 with n = m +- 1, so that the surgery is topologically a
// (+-1)-surgery and returns S^3. Diagrams with n = m - 1 form C1, those with
// n = m + 1 form C2. Each (+-1)-presentation of the surgery is tested with the
// topological framing unknot K0 (tb = -1, rot = 0, lk(K, K0) = +-1), which
// bounds a disk after surgery; a Bennequin violation for K0 certifies an
// overtwisted result.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contactkirby/errors.hpp"
#include "contactkirby/exact.hpp"
#include "contactkirby/legendrian.hpp"
#include "contactkirby/presentation.hpp"
#include "contactkirby/transform.hpp"

namespace contactkirby {

enum class Collection { c1, c2, rejected };

inline std::string to_string(Collection c) {
  switch (c) {
    case Collection::c1: return "C1";
    case Collection::c2: return "C2";
    case Collection::rejected: return "rejected";
  }
  return "?";
}

enum class GateCondition { tb_not_negative, framing_negative, topological_condition, invalid_unknot };

class GateRejection : public InvalidInput {
 public:
  GateRejection(GateCondition condition, const std::string& what)
      : InvalidInput(what), condition_(condition) {}

  GateCondition condition() const { return condition_; }

 private:
  GateCondition condition_;
};

struct CandidateDiagram {
  std::int64_t m = 1;
  std::int64_t n = 0;
  std::int64_t rot = 0;
  Collection collection = Collection::rejected;

  LegendrianUnknot knot() const { return validate_unknot(-m, rot); }
  /// Sign of the topological surgery coefficient n - m.
  Sign topological_sign() const { return collection == Collection::c2 ? Sign::plus : Sign::minus; }
};

inline std::int64_t default_rot(std::int64_t m) { return -(m - 1); }

inline Collection collection_for(std::int64_t m, std::int64_t n) {
  auto branch = kirby_topological_condition(m, n);
  if (!branch) return Collection::rejected;
  return *branch == Sign::plus ? Collection::c2 : Collection::c1;
}

inline CandidateDiagram gate(std::int64_t m, std::int64_t n, std::int64_t rot) {
  if (m < 1)
    throw GateRejection(GateCondition::tb_not_negative,
                        "tb(K) = -m must be negative (m >= 1), got m=" + std::to_string(m));
  if (n < 0)
    throw GateRejection(GateCondition::framing_negative,
                        "contact framing n must be >= 0, got n=" + std::to_string(n));
  auto collection = collection_for(m, n);
  if (collection == Collection::rejected)
    throw GateRejection(GateCondition::topological_condition,
                        "topological condition n = m +- 1 fails (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  try {
    validate_unknot(-m, rot);
  } catch (const InvalidLegendrian& e) {
    throw GateRejection(GateCondition::invalid_unknot, e.what());
  }
  return {m, n, rot, collection};
}

enum class Status { overtwisted_certified, consistent_with_standard_tight };

inline std::string to_string(Status s) {
  return s == Status::overtwisted_certified ? "overtwisted-certified"
                                            : "consistent-with-standard-tight";
}

struct PresentationVerdict {
  std::vector<Sign> sign_choice;
  std::optional<std::int64_t> tb_new;  // absent for contact 0-surgery
  std::optional<std::int64_t> rot_new;
  std::optional<BennequinVerdict> bennequin;
  std::optional<BigInt> det;
  Status status = Status::overtwisted_certified;
  std::string reason;

  std::string signs_string() const {
    std::string s;
    for (auto sign : sign_choice) s += symbol(sign);
    return s;
  }
};

struct CandidateReport {
  CandidateDiagram diagram;
  std::vector<PresentationVerdict> verdicts;
  std::string summary;

  Collection collection() const { return diagram.collection; }

  bool survives() const {
    for (const auto& v : verdicts)
      if (v.status == Status::consistent_with_standard_tight) return true;
    return false;
  }
};

/// The framing unknot used by both screens.
inline ExternalKnot framing_unknot(Sign topological_sign) {
  return {validate_unknot(-1, 0), value(topological_sign)};
}

inline PresentationVerdict judge(const Presentation& p, const ExternalKnot& ext) {
  PresentationVerdict v;
  v.sign_choice = p.sign_choice;
  v.det = det(linking_matrix(p));
  auto inv = invariants_after_surgery(p, ext);
  v.tb_new = inv.tb_new;
  v.rot_new = inv.rot_new;
  v.bennequin = bennequin(inv.tb_new, inv.rot_new);
  if (v.bennequin->satisfied) {
    v.status = Status::consistent_with_standard_tight;
    v.reason = "framing unknot satisfies the Bennequin bound; tightness asserted, not computed";
  } else {
    v.status = Status::overtwisted_certified;
    v.reason = "framing unknot bounds a disk and violates tb + |rot| <= -1";
  }
  return v;
}

inline CandidateReport classify(const CandidateDiagram& d) {
  CandidateReport report{d, {}, {}};
  if (d.collection == Collection::rejected)
    throw InvalidInput("diagram did not pass the gate");

  if (d.collection == Collection::c1 && d.n == 0) {
    PresentationVerdict v;
    v.status = Status::overtwisted_certified;
    v.reason = "contact 0-surgery yields an overtwisted contact structure";
    report.verdicts.push_back(std::move(v));
  } else {
    auto ext = framing_unknot(d.topological_sign());
    for (const auto& p : enumerate_presentations(d.knot(), Rational(d.n)))
      report.verdicts.push_back(judge(p, ext));
  }

  if (report.survives())
    report.summary =
        "potential contact Kirby move of type 1: a presentation survives the Bennequin screen "
        "(tight, asserted)";
  else
    report.summary = "not a contact Kirby move candidate: every presentation is overtwisted";
  return report;
}

inline CandidateReport classify(std::int64_t m, std::int64_t n) {
  return classify(gate(m, n, default_rot(m)));
}

/// Reports for (m, m-1) then (m, m+1), m = 1 .. m_max.
inline std::vector<CandidateReport> emit_table(std::int64_t m_max) {
  std::vector<CandidateReport> rows;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    rows.push_back(classify(m, m - 1));
    rows.push_back(classify(m, m + 1));
  }
  return rows;
}

}  // namespace contactkirby

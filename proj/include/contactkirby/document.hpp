#pragma once

// JSON interchange for diagrams and reports, plus plain-text renderings.
//
// Output is canonical: object keys are sorted, integers that fit 64 bits are
// JSON integers, larger ones and every rational are strings ("-3/2"). No
// floating point is ever produced, so emit(parse(emit(x))) == emit(x).

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "contactkirby/errors.hpp"
#include "contactkirby/exact.hpp"
#include "contactkirby/kirby.hpp"
#include "contactkirby/legendrian.hpp"
#include "contactkirby/presentation.hpp"
#include "contactkirby/transform.hpp"

namespace contactkirby {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::string emit(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json json_int(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline std::vector<Sign> parse_signs(const std::string& text) {
  std::vector<Sign> out;
  for (char c : text) {
    if (c == '+') out.push_back(Sign::plus);
    else if (c == '-') out.push_back(Sign::minus);
    else throw InvalidInput("signs must be a string over {+,-}, got '" + text + "'");
  }
  return out;
}

inline std::string signs_string(const std::vector<Sign>& signs) {
  std::string s;
  for (auto sign : signs) s += symbol(sign);
  return s;
}

/// Input document: a surgery on one Legendrian unknot, optionally with a
/// fixed sign vector and an external knot to transport.
struct DiagramDocument {
  LegendrianUnknot knot;
  Rational coefficient;
  std::optional<std::vector<Sign>> signs;
  std::optional<ExternalKnot> external;
};

namespace detail {

inline std::int64_t get_int(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace detail

inline DiagramDocument parse_diagram(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("diagram document must be a JSON object");
  if (!doc.contains("knot") || !doc.at("knot").is_object()) throw InvalidInput("missing object 'knot'");
  const auto& knot = doc.at("knot");
  if (knot.contains("type") && knot.at("type") != "unknot")
    throw InvalidInput("only knot type 'unknot' is supported");
  auto k = validate_unknot(detail::get_int(knot, "tb"), detail::get_int(knot, "rot"));

  if (!doc.contains("coefficient")) throw InvalidInput("missing field 'coefficient'");
  const auto& c = doc.at("coefficient");
  Rational r;
  if (c.is_string()) r = Rational::parse(c.get<std::string>());
  else if (c.is_number_integer()) r = Rational(c.get<std::int64_t>());
  else throw InvalidInput("coefficient must be a \"p/q\" string or an integer");

  DiagramDocument out{k, r, std::nullopt, std::nullopt};
  if (doc.contains("signs") && !doc.at("signs").is_null()) {
    if (!doc.at("signs").is_string()) throw InvalidInput("signs must be a string");
    out.signs = parse_signs(doc.at("signs").get<std::string>());
  }
  if (doc.contains("external") && !doc.at("external").is_null()) {
    const auto& e = doc.at("external");
    out.external = ExternalKnot{validate_unknot(detail::get_int(e, "tb"), detail::get_int(e, "rot")),
                                detail::get_int(e, "lk")};
  }
  return out;
}

inline Json to_json(const LegendrianUnknot& k) {
  return {{"type", "unknot"}, {"tb", k.tb()}, {"rot", k.rot()}};
}

inline Json to_json(const ExternalKnot& e) {
  return {{"tb", e.knot.tb()}, {"rot", e.knot.rot()}, {"lk", e.lk_with_original}};
}

inline Json to_json(const DiagramDocument& d) {
  Json j = {{"knot", to_json(d.knot)}, {"coefficient", d.coefficient.str()}};
  if (d.signs) j["signs"] = signs_string(*d.signs);
  if (d.external) j["external"] = to_json(*d.external);
  return j;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (const auto& x : m.row(i)) row.push_back(json_int(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const BennequinVerdict& b) {
  return {{"satisfied", b.satisfied}, {"slack", b.slack}};
}

inline Json to_json(const Presentation& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) {
    comps.push_back({{"index", c.index},
                     {"tb", c.knot.tb()},
                     {"rot", c.knot.rot()},
                     {"contact_coeff", value(c.contact_sign)},
                     {"topological_coeff", c.topological_coeff()},
                     {"parent", c.parent ? Json(*c.parent) : Json(nullptr)},
                     {"stabilizations", {{"positive", c.stabs_pos}, {"negative", c.stabs_neg}}}});
  }
  auto m = linking_matrix(p);
  return {{"signs", p.signs_string()},
          {"components", std::move(comps)},
          {"linking_matrix", to_json(m)},
          {"det", json_int(det(m))}};
}

/// Presentations selected by the document: the one named by its signs, or all.
inline std::vector<Presentation> presentations_for(const DiagramDocument& d) {
  if (d.signs) return {convert(d.knot, d.coefficient, *d.signs)};
  return enumerate_presentations(d.knot, d.coefficient);
}

inline Json expand_document(const Rational& r) {
  auto cf = expand_negative(r);
  auto check = cf.coeffs;
  check.front() += 1;
  return {{"schema_version", kSchemaVersion},
          {"command", "expand"},
          {"input", r.str()},
          {"coefficients", cf.coeffs},
          {"stabilizations", cf.stabilizations()},
          {"check", evaluate_cf(check).str()}};
}

inline Json convert_document(const DiagramDocument& d) {
  Json ps = Json::array();
  for (const auto& p : presentations_for(d)) ps.push_back(to_json(p));
  return {{"schema_version", kSchemaVersion},
          {"command", "convert"},
          {"input", to_json(d)},
          {"presentations", std::move(ps)}};
}

inline Json analyze_document(const DiagramDocument& d, const ExternalKnot& ext) {
  DiagramDocument echo = d;
  echo.external = ext;
  Json ps = Json::array();
  for (const auto& p : presentations_for(d)) {
    Json j = to_json(p);
    auto inv = invariants_after_surgery(p, ext);
    auto b = bennequin(inv.tb_new, inv.rot_new);
    j["external"] = {{"tb_new", inv.tb_new},
                     {"rot_new", inv.rot_new},
                     {"bennequin", to_json(b)},
                     {"verdict", b.satisfied ? "bennequin satisfied"
                                             : "bennequin violated: overtwisted if the knot bounds a disk"}};
    ps.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion},
          {"command", "analyze"},
          {"input", to_json(echo)},
          {"presentations", std::move(ps)}};
}

inline Json to_json(const PresentationVerdict& v) {
  Json j = {{"signs", v.signs_string()}, {"status", to_string(v.status)}, {"reason", v.reason}};
  j["tb_new"] = v.tb_new ? Json(*v.tb_new) : Json(nullptr);
  j["rot_new"] = v.rot_new ? Json(*v.rot_new) : Json(nullptr);
  j["bennequin"] = v.bennequin ? to_json(*v.bennequin) : Json(nullptr);
  j["det"] = v.det ? json_int(*v.det) : Json(nullptr);
  return j;
}

inline Json to_json(const CandidateReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"diagram",
           {{"m", r.diagram.m}, {"n", r.diagram.n}, {"tb", -r.diagram.m}, {"rot", r.diagram.rot}}},
          {"collection", to_string(r.collection())},
          {"verdicts", std::move(verdicts)},
          {"survivor", r.survives()},
          {"summary", r.summary}};
}

inline Json classify_document(const CandidateReport& r) {
  Json j = to_json(r);
  j["schema_version"] = kSchemaVersion;
  j["command"] = "classify";
  return j;
}

inline Json table_document(std::int64_t m_max, const std::vector<CandidateReport>& rows) {
  Json reports = Json::array();
  for (const auto& r : rows) reports.push_back(to_json(r));
  return {{"schema_version", kSchemaVersion},
          {"command", "table"},
          {"m_max", m_max},
          {"reports", std::move(reports)}};
}

// Plain-text renderings. These are for people; JSON is the interchange.

inline std::string render_coeffs(const std::vector<std::int64_t>& coeffs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i];
  os << ']';
  return os.str();
}

inline std::string render_expand(const Rational& r) {
  auto cf = expand_negative(r);
  auto check = cf.coeffs;
  check.front() += 1;
  std::ostringstream os;
  os << render_coeffs(cf.coeffs) << '\n'
     << "check: " << render_coeffs(check) << " = " << evaluate_cf(check) << '\n';
  return os.str();
}

inline std::string render_matrix(const IntMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m.row(i)) {
      cells.push_back(x.str());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& s = cells[i * m.size() + j];
      os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

inline std::string render_presentation(const Presentation& p,
                                       const std::optional<ExternalKnot>& ext = std::nullopt) {
  std::ostringstream os;
  os << "presentation signs=\"" << p.signs_string() << "\"\n";
  os << "  idx    tb   rot  contact  topo  parent  zigzags(+/-)\n";
  for (const auto& c : p.components) {
    char line[128];
    std::snprintf(line, sizeof line, "  %3zu %5lld %5lld %8s %5lld %7s  %lld/%lld\n", c.index,
                  static_cast<long long>(c.knot.tb()), static_cast<long long>(c.knot.rot()),
                  c.contact_sign == Sign::plus ? "+1" : "-1",
                  static_cast<long long>(c.topological_coeff()),
                  c.parent ? std::to_string(*c.parent).c_str() : "-",
                  static_cast<long long>(c.stabs_pos), static_cast<long long>(c.stabs_neg));
    os << line;
  }
  auto m = linking_matrix(p);
  os << "linking matrix (det " << det(m) << "):\n" << render_matrix(m);
  if (ext) {
    auto inv = invariants_after_surgery(p, *ext);
    auto b = bennequin(inv.tb_new, inv.rot_new);
    os << "external knot: tb_new=" << inv.tb_new << " rot_new=" << inv.rot_new
       << " bennequin " << (b.satisfied ? "satisfied" : "VIOLATED") << " (slack " << b.slack
       << ")\n";
  }
  return os.str();
}

inline std::string render_verdict(const PresentationVerdict& v) {
  std::ostringstream os;
  if (!v.tb_new) return "0-surgery: overtwisted";
  os << (v.sign_choice.empty() ? "(none)" : v.signs_string()) << " (" << *v.tb_new << ","
     << *v.rot_new << ") "
     << (v.status == Status::overtwisted_certified ? "overtwisted" : "tight (asserted)");
  return os.str();
}

inline std::string render_reports(const std::vector<CandidateReport>& rows) {
  std::ostringstream os;
  os << "   m    n  coll  survivor  branches (signs (tb_new,rot_new) verdict)\n";
  for (const auto& r : rows) {
    char head[64];
    std::snprintf(head, sizeof head, "%4lld %4lld  %-4s  %-8s  ",
                  static_cast<long long>(r.diagram.m), static_cast<long long>(r.diagram.n),
                  to_string(r.collection()).c_str(), r.survives() ? "yes" : "no");
    os << head;
    for (std::size_t i = 0; i < r.verdicts.size(); ++i)
      os << (i ? "; " : "") << render_verdict(r.verdicts[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace contactkirby

// contactkirby: command-line front end.
//
//   contactkirby expand -3/2
//   contactkirby convert --tb -2 --rot -1 --coeff 3
//   contactkirby analyze --tb -2 --rot -1 --coeff 3 --lk 1 --format json
//   contactkirby classify --m 2 --n 3
//   contactkirby table --m-max 5 --format json
//
// Exit codes: 0 success, 2 invalid input or gate rejection, 3 arithmetic
// failure (singular linking matrix, non-integral invariant).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contactkirby/document.hpp"

namespace ck = contactkirby;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitArithmetic = 3;

struct DiagramArgs {
  std::optional<std::int64_t> tb;
  std::optional<std::int64_t> rot;
  std::optional<std::string> coeff;
  std::optional<std::string> signs;
  std::optional<std::string> input;
};

void add_diagram_options(CLI::App* cmd, DiagramArgs& a) {
  cmd->add_option("--tb", a.tb, "Thurston-Bennequin number of the surgery knot");
  cmd->add_option("--rot", a.rot, "rotation number of the surgery knot");
  cmd->add_option("--coeff", a.coeff, "contact surgery coefficient, p/q or integer");
  cmd->add_option("--signs", a.signs, "stabilization signs over {+,-}; omit for all branches");
  cmd->add_option("--input", a.input, "read a diagram document (JSON) from this file");
}

ck::DiagramDocument load_diagram(const DiagramArgs& a) {
  ck::Json doc = ck::Json::object();
  if (a.input) {
    std::ifstream in(*a.input);
    if (!in) throw ck::InvalidInput("cannot open input file '" + *a.input + "'");
    try {
      doc = ck::Json::parse(in);
    } catch (const ck::Json::parse_error& e) {
      throw ck::InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ck::InvalidInput("diagram document must be a JSON object");
  }
  // Flags override document fields.
  if (a.tb || a.rot) {
    if (!doc.contains("knot")) doc["knot"] = ck::Json::object();
    if (a.tb) doc["knot"]["tb"] = *a.tb;
    if (a.rot) doc["knot"]["rot"] = *a.rot;
  }
  if (a.coeff) doc["coefficient"] = *a.coeff;
  if (a.signs) doc["signs"] = *a.signs;
  return ck::parse_diagram(doc);
}

std::string format_of(const std::string& f) {
  if (f != "json" && f != "table") throw ck::InvalidInput("--format must be json or table");
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact surgery diagrams on Legendrian unknots: (+-1)-presentations, "
               "post-surgery invariants and contact Kirby move screening"};
  app.require_subcommand(1);
  std::string format = "table";

  auto* expand = app.add_subcommand("expand", "negative continued fraction of r < 0");
  std::string expand_arg;
  expand->add_option("r", expand_arg, "negative rational p/q")->required();
  expand->add_option("--format", format, "json or table");

  DiagramArgs convert_args;
  auto* convert = app.add_subcommand("convert", "contact (+-1)-surgery presentations");
  add_diagram_options(convert, convert_args);
  convert->add_option("--format", format, "json or table");

  DiagramArgs analyze_args;
  std::int64_t ext_tb = -1;
  std::int64_t ext_rot = 0;
  std::int64_t ext_lk = 1;
  bool ext_given = false;
  auto* analyze = app.add_subcommand("analyze", "invariants of an external unknot after surgery");
  add_diagram_options(analyze, analyze_args);
  analyze->add_option("--ext-tb", ext_tb, "tb of the external unknot (default -1)");
  analyze->add_option("--ext-rot", ext_rot, "rot of the external unknot (default 0)");
  analyze->add_option("--lk", ext_lk, "linking number of the external unknot with K (default 1)");
  analyze->add_option("--format", format, "json or table");

  std::int64_t m = 0;
  std::int64_t n = 0;
  std::optional<std::int64_t> cand_rot;
  auto* classify = app.add_subcommand("classify", "screen one candidate diagram");
  classify->add_option("--m", m, "tb(K) = -m")->required();
  classify->add_option("--n", n, "contact surgery coefficient")->required();
  classify->add_option("--rot", cand_rot, "rot(K), default -(m-1)");
  classify->add_option("--format", format, "json or table");

  std::int64_t m_max = 0;
  auto* table = app.add_subcommand("table", "screen (m, m-1) and (m, m+1) for m = 1..m-max");
  table->add_option("--m-max", m_max, "largest m")->required();
  table->add_option("--format", format, "json or table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const bool json = format_of(format) == "json";
    std::string out;
    if (*expand) {
      auto r = ck::Rational::parse(expand_arg);
      out = json ? ck::emit(ck::expand_document(r)) : ck::render_expand(r);
    } else if (*convert) {
      auto d = load_diagram(convert_args);
      if (json) {
        out = ck::emit(ck::convert_document(d));
      } else {
        for (const auto& p : ck::presentations_for(d)) out += ck::render_presentation(p);
      }
    } else if (*analyze) {
      auto d = load_diagram(analyze_args);
      ext_given = analyze->count("--ext-tb") || analyze->count("--ext-rot") || analyze->count("--lk");
      ck::ExternalKnot ext{ck::validate_unknot(ext_tb, ext_rot), ext_lk};
      if (d.external && !ext_given) ext = *d.external;
      if (json) {
        out = ck::emit(ck::analyze_document(d, ext));
      } else {
        for (const auto& p : ck::presentations_for(d)) out += ck::render_presentation(p, ext);
      }
    } else if (*classify) {
      auto d = ck::gate(m, n, cand_rot.value_or(ck::default_rot(m)));
      auto report = ck::classify(d);
      out = json ? ck::emit(ck::classify_document(report)) : ck::render_reports({report}) +
                                                                 report.summary + "\n";
    } else if (*table) {
      if (m_max < 0) throw ck::InvalidInput("--m-max must be non-negative");
      auto rows = ck::emit_table(m_max);
      out = json ? ck::emit(ck::table_document(m_max, rows)) : ck::render_reports(rows);
    }
    std::cout << out;
    return 0;
  } catch (const ck::SingularMatrix& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArithmetic;
  } catch (const ck::NonIntegralInvariant& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArithmetic;
  } catch (const ck::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ck::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArithmetic;
  }
}

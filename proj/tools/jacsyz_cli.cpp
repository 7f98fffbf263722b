// jacsyz: Jacobian syzygies, Tjurina numbers and maximal Tjurina checks for
// plane curves.
//
// Exit codes: 0 ok, 2 parse error, 3 non-reduced input, 4 consistency failure
// (including failed verification rows), 5 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacsyz/parse.hpp"
#include "jacsyz/report.hpp"

namespace {

using namespace jacsyz;
using nlohmann::json;

enum Exit { kOk = 0, kParse = 2, kNotReduced = 3, kConsistency = 4, kUsage = 5 };

struct Common {
  std::string field = "auto";
  bool json_out = false;
  bool timing = false;
  int kmax = -1;

  PipelineOptions pipeline() const {
    PipelineOptions o;
    o.field = FieldChoice::parse(field);
    o.timing = timing;
    if (kmax >= 0) o.analysis.kmax = kmax;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "rat | fp:<prime> | dual | auto (rat up to degree 9, dual above)");
  cmd->add_flag("--json", c.json_out, "machine-readable output");
  cmd->add_flag("--timing", c.timing, "include the wall time in the report");
  cmd->add_option("--kmax", c.kmax, "override the generator degree ceiling 2d-4")->check(CLI::NonNegativeNumber);
}

void emit(const CurveReport& rep, bool json_out) {
  if (json_out)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << render_text(rep);
}

int cmd_analyze(const std::string& text, const Common& c) {
  CurveInput in{"poly", 0, parse_poly(text), std::nullopt, true};
  emit(analyze_curve(in, c.pipeline()), c.json_out);
  return kOk;
}

int cmd_family(const std::string& name, int param, bool list, bool analyze, const Common& c) {
  if (list) {
    for (const auto& f : family_catalog()) {
      std::cout << f.name << "  " << f.param;
      if (f.param != "-") std::cout << " >= " << f.min << (f.max ? " <= " + std::to_string(*f.max) : "");
      std::cout << "  " << f.summary << "\n";
    }
    return kOk;
  }
  if (name.empty()) throw DomainError("a family name is required");
  auto in = make_family(name, param);
  if (!analyze) {
    if (c.json_out)
      std::cout << json{{"family", name}, {"param", param}, {"degree", in.poly.degree()}, {"polynomial", format(in.poly)}}.dump(2)
                << "\n";
    else
      std::cout << format(in.poly) << "\n";
    return kOk;
  }
  emit(analyze_curve(in, c.pipeline()), c.json_out);
  return kOk;
}

std::string cell(const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; }

int cmd_verify(const std::string& suite, int dmin, int dmax, const Common& c) {
  auto opts = c.pipeline();
  auto rows = run_suite(suite_members(suite, dmin, dmax), opts);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass();
  if (c.json_out) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"family", r.family},
                     {"param", r.param},
                     {"d", r.d},
                     {"r_expected", r.r_expected},
                     {"r_computed", r.r_computed},
                     {"tau_expected", r.tau_expected},
                     {"tau_computed", r.tau_computed},
                     {"maximal_expected", r.maximal_expected},
                     {"maximal_computed", r.maximal_computed},
                     {"equivalence", r.equivalence ? json(*r.equivalence) : json(nullptr)},
                     {"thresholds", r.thresholds ? json(*r.thresholds) : json(nullptr)},
                     {"bourbaki", r.bourbaki ? json(*r.bourbaki) : json(nullptr)},
                     {"properties", r.properties},
                     {"error", r.error},
                     {"pass", r.pass()}});
    std::cout << json{{"suite", suite}, {"rows", out}, {"pass", ok}}.dump(2) << "\n";
  } else {
    std::printf("%-17s %5s %3s %7s %9s %7s %6s %6s %6s %6s %s\n", "family", "param", "d", "r exp", "r got",
                "tau exp", "tau", "max", "equiv", "thr", "result");
    for (const auto& r : rows) {
      std::printf("%-17s %5d %3d %7d %9d %7ld %6ld %6s %6s %6s %s\n", r.family.c_str(), r.param, r.d, r.r_expected,
                  r.r_computed, r.tau_expected, r.tau_computed, r.maximal_computed ? "yes" : "no",
                  cell(r.equivalence).c_str(), cell(r.thresholds).c_str(), r.pass() ? "pass" : "FAIL");
      if (!r.error.empty()) std::printf("    error: %s\n", r.error.c_str());
    }
    std::printf("%zu rows, %s\n", rows.size(), ok ? "all pass" : "some rows FAIL");
  }
  return ok ? kOk : kConsistency;
}

int cmd_tau_max(int d, int r, bool json_out) {
  const long v = tau_max(d, r);
  const char* branch = tau_max_upper_branch(d, r) ? "r >= d/2" : "r < d/2";
  if (json_out)
    std::cout << json{{"d", d}, {"r", r}, {"tau_max", v}, {"branch", branch}}.dump(2) << "\n";
  else
    std::cout << v << "  (" << branch << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian syzygies and maximal Tjurina curves"};
  app.require_subcommand(1);

  Common common;
  std::string poly_text;
  auto* analyze = app.add_subcommand("analyze", "analyze a homogeneous polynomial in x, y, z");
  analyze->add_option("polynomial", poly_text, "e.g. \"y^2*z - x^2*(x+z)\"")->required();
  add_common(analyze, common);

  std::string family;
  int param = 0;
  bool list = false, do_print = false, do_analyze = false;
  auto* fam = app.add_subcommand("family", "print or analyze a member of a curve family");
  fam->add_option("name", family, "family name (see --list)");
  fam->add_option("--param", param, "family parameter");
  fam->add_flag("--list", list, "list the families");
  auto* print_flag = fam->add_flag("--print", do_print, "print the polynomial (default)");
  fam->add_flag("--analyze", do_analyze, "analyze the curve")->excludes(print_flag);
  add_common(fam, common);

  std::string suite = "all";
  int dmin = 3, dmax = kAutoRationalMaxDegree;
  auto* verify = app.add_subcommand("verify", "check the families against their closed forms");
  verify->add_option("suite", suite, "all | thm2 | s3 | s4 | exm4 | ex12 | sec44 | generic | prop0");
  verify->add_option("--dmin", dmin, "smallest degree");
  verify->add_option("--dmax", dmax, "largest degree");
  add_common(verify, common);

  int td = 0, tr = 0;
  auto* taumax = app.add_subcommand("tau-max", "upper bound for tau given degree and mdr");
  taumax->add_option("d", td, "degree")->required();
  taumax->add_option("r", tr, "minimal degree of a syzygy")->required();
  taumax->add_flag("--json", common.json_out, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(poly_text, common);
    if (*fam) return cmd_family(family, param, list, do_analyze, common);
    if (*verify) return cmd_verify(suite, dmin, dmax, common);
    if (*taumax) return cmd_tau_max(td, tr, common.json_out);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotHomogeneous& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotReduced& e) {
    std::cerr << "not reduced: " << e.what() << "\n";
    return kNotReduced;
  } catch (const DomainError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  }
  return kUsage;
}

#include "jacsyz/report.hpp"

#include <chrono>
#include <sstream>

#include "jacsyz/reduced.hpp"

namespace jacsyz {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_get(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json point_json(const Point3& p) { return json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()}); }

Point3 point_from(const json& j) {
  return {mpq_class(j.at(0).get<std::string>()), mpq_class(j.at(1).get<std::string>()),
          mpq_class(j.at(2).get<std::string>())};
}

template <Field F>
void fill(CurveReport& rep, const HomogPoly<F>& f, const SyzygyAnalysis<F>& a) {
  rep.summary = a.summary;
  rep.dims = a.dims;
  rep.bourbaki = a.bourbaki;
  rep.generators.clear();
  for (const auto& g : a.generators) rep.generators.push_back(format(g));
  rep.checks.violations = property_violations(a.summary, a.dims, rep.lattice ? &*rep.lattice : nullptr);
  for (auto& v : certificate_violations(f, a)) rep.checks.violations.push_back(std::move(v));
}

void fill_checks(CurveReport& rep) {
  const auto& s = rep.summary;
  const int d = s.degree;
  const int r = s.mdr;
  rep.classification = classify(s);
  auto& c = rep.checks;
  if (r == 0) {
    rep.notes.push_back("pencil of lines: classification suppressed");
    return;
  }
  if (rep.classification.tau_max) c.tau_bound = s.tau <= *rep.classification.tau_max;
  if (2 * r >= d && r <= d - 1) {
    c.equivalence = verify_maximal_equivalence(s);
    if (rep.classification.is_maximal_tjurina) c.thresholds = verify_thresholds(s);
  } else {
    rep.notes.push_back("free-range regime: r < d/2");
  }
  if (rep.bourbaki) {
    c.deg_z_formula = rep.bourbaki->deg_z == rep.bourbaki->predicted;
    if (rep.classification.is_maximal_tjurina && 2 * r >= d)
      c.deg_z_equality = rep.bourbaki->deg_z == bourbaki_equality_value(d, r);
  }
  if (s.tau == 0 && s.ct) rep.notes.push_back("smooth curve with finite coincidence threshold");
}

/// Everything two prime runs must agree on (the chosen rho_1 may differ).
bool same_invariants(const SyzygyAnalysis<PrimeField>& a, const SyzygyAnalysis<PrimeField>& b) {
  if (!(a.summary == b.summary)) return false;
  if (a.dims.ar != b.dims.ar || a.dims.kr != b.dims.kr || a.dims.milnor != b.dims.milnor) return false;
  if (a.bourbaki.has_value() != b.bourbaki.has_value()) return false;
  if (a.bourbaki && (a.bourbaki->deg_z != b.bourbaki->deg_z ||
                     a.bourbaki->generator_degrees != b.bourbaki->generator_degrees ||
                     a.bourbaki->hilbert != b.bourbaki->hilbert))
    return false;
  return true;
}

}  // namespace

FieldChoice FieldChoice::parse(const std::string& text) {
  if (text == "rat") return {Mode::Rational, 0};
  if (text == "dual") return {Mode::Dual, 0};
  if (text == "auto") return {Mode::Auto, 0};
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
      throw DomainError("bad prime in field '" + text + "'");
    const auto p = std::stoull(digits);
    FieldSpec::prime_field(p);
    return {Mode::Prime, p};
  }
  throw DomainError("unknown field '" + text + "' (expected rat, fp:<p>, dual or auto)");
}

std::string FieldChoice::name() const {
  switch (mode) {
    case Mode::Rational: return "rat";
    case Mode::Prime: return "fp:" + std::to_string(prime);
    case Mode::Dual: return "dual";
    case Mode::Auto: return "auto";
  }
  return "auto";
}

std::pair<std::uint64_t, std::uint64_t> dual_primes() { return {working_prime(0), working_prime(1)}; }

CurveReport analyze_curve(const CurveInput& in, const PipelineOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (in.poly.degree() < 1 || in.poly.is_zero()) throw DomainError("the curve needs a nonconstant polynomial");
  if (!is_reduced_probabilistic(in.poly)) throw NotReduced("the polynomial has a repeated factor");

  CurveReport rep;
  rep.polynomial = format(in.poly);
  if (in.family != "poly") {
    rep.family = in.family;
    rep.param = in.param;
    if (!in.claimed) rep.notes.push_back("family parameter outside the range with a maximality claim");
  }
  if (in.arrangement) rep.lattice = lattice(*in.arrangement);

  auto mode = opts.field.mode;
  if (mode == FieldChoice::Mode::Auto)
    mode = in.poly.degree() <= kAutoRationalMaxDegree ? FieldChoice::Mode::Rational : FieldChoice::Mode::Dual;

  switch (mode) {
    case FieldChoice::Mode::Rational: {
      auto a = analyze(in.poly, opts.analysis);
      rep.field = "rat";
      fill(rep, in.poly, a);
      break;
    }
    case FieldChoice::Mode::Prime: {
      PrimeField k(opts.field.prime);
      auto f = reduce_input(in, k);
      auto a = analyze(f, opts.analysis);
      rep.field = k.spec().name();
      rep.probabilistic = true;
      rep.exact = false;
      fill(rep, f, a);
      break;
    }
    default: {
      auto [p1, p2] = dual_primes();
      PrimeField k1(p1), k2(p2);
      auto f1 = reduce_input(in, k1);
      auto f2 = reduce_input(in, k2);
      auto a1 = analyze(f1, opts.analysis);
      auto a2 = analyze(f2, opts.analysis);
      if (!same_invariants(a1, a2))
        throw ConsistencyError("the two primes " + std::to_string(p1) + " and " + std::to_string(p2) +
                               " give different invariants");
      rep.field = "dual:" + std::to_string(p1) + "," + std::to_string(p2);
      rep.probabilistic = true;
      fill(rep, f1, a1);
      break;
    }
  }
  fill_checks(rep);
  if (rep.probabilistic) rep.exact = mode == FieldChoice::Mode::Dual && rep.checks.properties_hold();
  if (opts.timing)
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json to_json(const CurveReport& r) {
  const auto& s = r.summary;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = {{"polynomial", r.polynomial},
                {"family", r.family.empty() ? json(nullptr) : json(r.family)},
                {"param", r.family.empty() ? json(nullptr) : json(r.param)}};
  j["field"] = {{"name", r.field}, {"probabilistic", r.probabilistic}, {"exact", r.exact}};
  j["resolution"] = {{"d", s.degree},
                     {"mdr", s.mdr},
                     {"m", s.m()},
                     {"exponents", s.exponents},
                     {"relation_degrees", s.relation_degrees},
                     {"epsilons", s.epsilons},
                     {"tau", s.tau},
                     {"ct", opt(s.ct)},
                     {"st", s.st},
                     {"is_free", s.is_free},
                     {"mdr_prime", opt(s.mdr_prime)},
                     {"stable_degree", s.stable_degree},
                     {"kmax", s.kmax}};
  j["dims"] = {{"ar", r.dims.ar}, {"kr", r.dims.kr}, {"milnor", r.dims.milnor}, {"smooth_milnor", r.dims.smooth_milnor}};
  const auto& c = r.classification;
  j["classification"] = {{"class", to_string(c.cls)},
                         {"is_free", c.is_free},
                         {"is_nearly_free", c.is_nearly_free},
                         {"is_maximal_tjurina", c.is_maximal_tjurina},
                         {"tau_max", opt(c.tau_max)},
                         {"type", c.type.empty() ? json(nullptr) : json(c.type)}};
  j["generators"] = r.generators;
  if (r.bourbaki) {
    const auto& b = *r.bourbaki;
    j["bourbaki"] = {{"rho1", b.rho1},         {"generator_degrees", b.generator_degrees},
                     {"hilbert", b.hilbert},   {"stable_from", b.stable_from},
                     {"deg_z", b.deg_z},       {"predicted", b.predicted}};
  } else {
    j["bourbaki"] = nullptr;
  }
  if (r.lattice) {
    json pts = json::array();
    for (const auto& p : r.lattice->points) pts.push_back({{"point", point_json(p.point)}, {"multiplicity", p.multiplicity}});
    json counts = json::object();
    for (const auto& [mult, n] : r.lattice->counts) counts[std::to_string(mult)] = n;
    j["lattice"] = {{"points", pts}, {"counts", counts}, {"tau_comb", r.lattice->tau_comb}, {"max_mult", r.lattice->max_mult}};
  } else {
    j["lattice"] = nullptr;
  }
  const auto& t = r.checks;
  j["checks"] = {{"tau_bound", opt(t.tau_bound)},       {"equivalence", opt(t.equivalence)},
                 {"thresholds", opt(t.thresholds)},   {"deg_z_formula", opt(t.deg_z_formula)},
                 {"deg_z_equality", opt(t.deg_z_equality)}, {"properties", t.properties_hold()},
                 {"violations", t.violations}};
  j["notes"] = r.notes;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

CurveReport report_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw DomainError("unsupported report schema version");
  CurveReport r;
  const auto& in = j.at("input");
  r.polynomial = in.at("polynomial").get<std::string>();
  if (!in.at("family").is_null()) {
    r.family = in.at("family").get<std::string>();
    r.param = in.at("param").get<int>();
  }
  const auto& f = j.at("field");
  r.field = f.at("name").get<std::string>();
  r.probabilistic = f.at("probabilistic").get<bool>();
  r.exact = f.at("exact").get<bool>();
  const auto& s = j.at("resolution");
  auto& rs = r.summary;
  rs.degree = s.at("d").get<int>();
  rs.mdr = s.at("mdr").get<int>();
  rs.exponents = s.at("exponents").get<std::vector<int>>();
  rs.relation_degrees = s.at("relation_degrees").get<std::vector<int>>();
  rs.epsilons = s.at("epsilons").get<std::vector<int>>();
  rs.tau = s.at("tau").get<long>();
  rs.ct = opt_get<int>(s, "ct");
  rs.st = s.at("st").get<int>();
  rs.is_free = s.at("is_free").get<bool>();
  rs.mdr_prime = opt_get<int>(s, "mdr_prime");
  rs.stable_degree = s.at("stable_degree").get<int>();
  rs.kmax = s.at("kmax").get<int>();
  const auto& dm = j.at("dims");
  r.dims.ar = dm.at("ar").get<std::vector<long>>();
  r.dims.kr = dm.at("kr").get<std::vector<long>>();
  r.dims.milnor = dm.at("milnor").get<std::vector<long>>();
  r.dims.smooth_milnor = dm.at("smooth_milnor").get<std::vector<long>>();
  const auto& c = j.at("classification");
  r.classification.cls = curve_class_from_string(c.at("class").get<std::string>());
  r.classification.is_free = c.at("is_free").get<bool>();
  r.classification.is_nearly_free = c.at("is_nearly_free").get<bool>();
  r.classification.is_maximal_tjurina = c.at("is_maximal_tjurina").get<bool>();
  r.classification.tau_max = opt_get<long>(c, "tau_max");
  r.classification.type = c.at("type").is_null() ? "" : c.at("type").get<std::string>();
  r.generators = j.at("generators").get<std::vector<std::string>>();
  if (!j.at("bourbaki").is_null()) {
    const auto& b = j.at("bourbaki");
    BourbakiData bd;
    bd.rho1 = b.at("rho1").get<std::string>();
    bd.generator_degrees = b.at("generator_degrees").get<std::vector<int>>();
    bd.hilbert = b.at("hilbert").get<std::vector<long>>();
    bd.stable_from = b.at("stable_from").get<int>();
    bd.deg_z = b.at("deg_z").get<long>();
    bd.predicted = b.at("predicted").get<long>();
    r.bourbaki = bd;
  }
  if (!j.at("lattice").is_null()) {
    const auto& l = j.at("lattice");
    LatticeSummary ls;
    for (const auto& p : l.at("points")) ls.points.push_back({point_from(p.at("point")), p.at("multiplicity").get<int>()});
    for (const auto& [k, v] : l.at("counts").items()) ls.counts[std::stoi(k)] = v.get<int>();
    ls.tau_comb = l.at("tau_comb").get<long>();
    ls.max_mult = l.at("max_mult").get<int>();
    r.lattice = ls;
  }
  const auto& t = j.at("checks");
  r.checks.tau_bound = opt_get<bool>(t, "tau_bound");
  r.checks.equivalence = opt_get<bool>(t, "equivalence");
  r.checks.thresholds = opt_get<bool>(t, "thresholds");
  r.checks.deg_z_formula = opt_get<bool>(t, "deg_z_formula");
  r.checks.deg_z_equality = opt_get<bool>(t, "deg_z_equality");
  r.checks.violations = t.at("violations").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.seconds = opt_get<double>(j, "seconds");
  return r;
}

namespace {

std::string list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "holds" : "FAILS") : "n/a"; }

}  // namespace

std::string render_text(const CurveReport& r) {
  const auto& s = r.summary;
  std::ostringstream o;
  o << "curve        " << r.polynomial << "\n";
  if (!r.family.empty()) o << "family       " << r.family << " " << r.param << "\n";
  o << "field        " << r.field << (r.exact ? " (exact)" : " (probabilistic)") << "\n";
  o << "degree       " << s.degree << "\n";
  o << "mdr          " << s.mdr << "\n";
  o << "exponents    " << list(s.exponents) << "  m = " << s.m() << (s.is_free ? "  free" : "") << "\n";
  if (!s.is_free) o << "relations    " << list(s.relation_degrees) << "  epsilons " << list(s.epsilons) << "\n";
  o << "tau          " << s.tau;
  if (r.classification.tau_max) o << "  (tau_max " << *r.classification.tau_max << ")";
  o << "\n";
  o << "ct           " << (s.ct ? std::to_string(*s.ct) : "none (smooth)") << "\n";
  o << "st           " << s.st << "\n";
  o << "mdr'         " << (s.mdr_prime ? std::to_string(*s.mdr_prime) : "none up to " + std::to_string(s.kmax)) << "\n";
  o << "class        " << to_string(r.classification.cls);
  if (!r.classification.type.empty()) o << " type " << r.classification.type;
  if (r.classification.is_nearly_free && r.classification.cls != CurveClass::NearlyFree) o << ", nearly free";
  o << "\n";
  if (r.bourbaki) {
    o << "bourbaki     deg Z = " << r.bourbaki->deg_z << ", generator degrees " << list(r.bourbaki->generator_degrees)
      << "\n";
    o << "rho_1        " << r.bourbaki->rho1 << "\n";
  }
  if (r.lattice) {
    o << "lattice      ";
    for (const auto& [mult, n] : r.lattice->counts) o << n << " x mult " << mult << "  ";
    o << "tau_comb " << r.lattice->tau_comb << "\n";
  }
  o << "tau bound    " << yes_no(r.checks.tau_bound) << "\n";
  o << "equivalence  " << yes_no(r.checks.equivalence) << "\n";
  o << "thresholds   " << yes_no(r.checks.thresholds) << "\n";
  o << "deg Z        " << yes_no(r.checks.deg_z_formula) << " / equality " << yes_no(r.checks.deg_z_equality) << "\n";
  o << "properties   " << (r.checks.properties_hold() ? "hold" : "FAIL") << "\n";
  for (const auto& v : r.checks.violations) o << "  violation: " << v << "\n";
  for (const auto& n : r.notes) o << "note         " << n << "\n";
  if (r.seconds) o << "seconds      " << *r.seconds << "\n";
  return o.str();
}

bool SuiteRow::pass() const {
  return error.empty() && r_expected == r_computed && tau_expected == tau_computed &&
         maximal_expected == maximal_computed && equivalence != false && thresholds != false && bourbaki != false &&
         properties;
}

std::vector<std::string> suite_names() { return {"all", "thm2", "s3", "s4", "exm4", "ex12", "sec44", "generic", "prop0"}; }

std::vector<std::pair<std::string, int>> suite_members(const std::string& suite, int dmin, int dmax) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == suite;
  if (!known) throw DomainError("unknown suite '" + suite + "'");
  const bool every = suite == "all" || suite == "thm2";
  auto want = [&](const char* s) { return every || suite == s; };
  std::vector<std::pair<std::string, int>> out;
  for (int d = std::max(dmin, 3); d <= dmax; ++d) {
    if (every && d == 3) out.emplace_back("nodal-cubic", 0);
    if (every && d == 4) out.emplace_back("uninodal-quartic", 0);
    if (want("prop0") && d % 2 == 1 && d >= 5) out.emplace_back("prop0", (d + 1) / 2);
    if (want("exm4") && d % 2 == 1 && d >= 7) out.emplace_back("exm4", (d + 1) / 2);
    if (want("ex12") && d % 2 == 0 && d >= 4) out.emplace_back("ex1", d / 2);
    if (want("ex12") && d % 2 == 1 && d >= 5) out.emplace_back("ex2", d / 2);
    if (want("sec44") && d >= 6 && d <= 10) out.emplace_back("sec44", d);
    if (want("generic") && d >= 4) out.emplace_back("generic", d);
    if (want("s3") && d >= 7) out.emplace_back("s3", d);
    if (want("s4") && d >= 9) out.emplace_back("s4", d);
  }
  return out;
}

int expected_mdr(const std::string& family, int param) {
  const int d = family_degree(family, param);
  if (family == "prop0" || family == "exm4") return param;
  if (family == "ex1" || family == "ex2") return d - 1;
  if (family == "sec44" || family == "generic") return d - 2;
  if (family == "s3") return d - 3;
  if (family == "s4") return d - 4;
  if (family == "nodal-cubic") return 2;
  if (family == "uninodal-quartic") return 3;
  throw DomainError("unknown family '" + family + "'");
}

SuiteRow run_suite_row(const std::string& family, int param, const PipelineOptions& opts) {
  SuiteRow row;
  row.family = family;
  row.param = param;
  row.d = family_degree(family, param);
  row.r_expected = expected_mdr(family, param);
  auto in = make_family(family, param);
  row.maximal_expected = in.claimed;
  // The uninodal quartic has a single node.
  row.tau_expected = in.claimed ? tau_max(row.d, row.r_expected) : 1;
  try {
    auto rep = analyze_curve(in, opts);
    row.r_computed = rep.summary.mdr;
    row.tau_computed = rep.summary.tau;
    row.maximal_computed = rep.classification.is_maximal_tjurina;
    row.equivalence = rep.checks.equivalence;
    row.thresholds = rep.checks.thresholds;
    if (rep.checks.deg_z_formula) row.bourbaki = *rep.checks.deg_z_formula && rep.checks.deg_z_equality != false;
    row.properties = rep.checks.properties_hold();
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SuiteRow> run_suite(const std::vector<std::pair<std::string, int>>& members, const PipelineOptions& opts) {
  std::vector<SuiteRow> rows(members.size());
  const auto n = static_cast<std::ptrdiff_t>(members.size());
  // Rows are independent analyses; each writes only its own slot.
#ifdef JACSYZ_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& [family, param] = members[static_cast<std::size_t>(i)];
    try {
      rows[static_cast<std::size_t>(i)] = run_suite_row(family, param, opts);
    } catch (const std::exception& e) {
      rows[static_cast<std::size_t>(i)].family = family;
      rows[static_cast<std::size_t>(i)].param = param;
      rows[static_cast<std::size_t>(i)].error = e.what();
    }
  }
  return rows;
}

}  // namespace jacsyz

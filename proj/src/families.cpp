#include "jacsyz/families.hpp"

#include <algorithm>

#include "jacsyz/parse.hpp"

namespace jacsyz {

namespace {

std::string pw(const std::string& base, int e) {
  if (e == 0) return "1";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

Point3 cross(const Point3& u, const Point3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Point3& v) { return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0; }

mpq_class dot(const Point3& u, const Point3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

/// x/a + y/b - z.
Point3 intercept_line(const mpz_class& a, const mpz_class& b) { return {mpq_class(1, 1) / a, mpq_class(1, 1) / b, -1}; }

mpz_class two_pow(int n) { return mpz_class(1) << n; }

mpz_class three_pow(int n) {
  mpz_class r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

/// Lines of f_d: x, y, the pairs of h_{2e-2} and, for odd d, the extra line.
std::vector<Point3> triple_point_lines(int d) {
  const int e = d / 2;
  std::vector<Point3> lines{{1, 0, 0}, {0, 1, 0}};
  if (d % 2 == 1) lines.push_back(intercept_line(two_pow(e), three_pow(e)));
  for (int j = 1; j <= e - 1; ++j) {
    lines.push_back(intercept_line(two_pow(j), three_pow(j)));
    lines.push_back(intercept_line(two_pow(j), three_pow(j + 1)));
  }
  return lines;
}

CurveInput from_text(std::string family, int param, const std::string& text, bool claimed) {
  return CurveInput{std::move(family), param, parse_poly(text), std::nullopt, claimed};
}

CurveInput from_lines(std::string family, int param, const std::vector<Point3>& lines, bool claimed) {
  LineArrangement a(lines);
  auto poly = a.polynomial();
  return CurveInput{std::move(family), param, std::move(poly), std::move(a), claimed};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Point3 normalize_projective(Point3 v) {
  for (const auto& c : v) {
    if (sgn(c) == 0) continue;
    mpq_class s = c;
    for (auto& t : v) t /= s;
    return v;
  }
  throw DomainError("zero vector has no projective class");
}

LineArrangement::LineArrangement(const std::vector<Point3>& lines) {
  for (const auto& l : lines) {
    if (is_zero(l)) throw DomainError("zero linear form in an arrangement");
    auto n = normalize_projective(l);
    for (const auto& other : lines_)
      if (is_zero(cross(n, other))) throw DomainError("proportional lines in an arrangement");
    lines_.push_back(std::move(n));
  }
}

HomogPoly<RationalField> LineArrangement::polynomial() const {
  RationalField q;
  auto prod = HomogPoly<RationalField>::monomial(q, {0, 0, 0}, q.one());
  for (const auto& l : lines_) {
    mpz_class den = 1;
    for (const auto& c : l) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    HomogPoly<RationalField> form(q, 1);
    form.set_coeff({1, 0, 0}, l[0] * den);
    form.set_coeff({0, 1, 0}, l[1] * den);
    form.set_coeff({0, 0, 1}, l[2] * den);
    prod = mul(prod, form);
  }
  return prod;
}

LatticeSummary lattice(const LineArrangement& a) {
  const auto& ls = a.lines();
  std::map<Point3, int> seen;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      auto p = normalize_projective(cross(ls[i], ls[j]));
      if (seen.count(p)) continue;
      int mult = 0;
      for (const auto& l : ls)
        if (sgn(dot(l, p)) == 0) ++mult;
      seen.emplace(std::move(p), mult);
    }
  LatticeSummary out;
  for (auto& [p, mult] : seen) {
    out.points.push_back({p, mult});
    out.counts[mult] += 1;
    out.tau_comb += static_cast<long>(mult - 1) * (mult - 1);
    out.max_mult = std::max(out.max_mult, mult);
  }
  return out;
}

std::vector<int> lattice_multiplicities_mod(const LineArrangement& a, std::uint64_t p) {
  using P = std::array<std::uint64_t, 3>;
  std::vector<P> ls;
  for (const auto& l : a.lines()) {
    P r{modarith::reduce(l[0], p), modarith::reduce(l[1], p), modarith::reduce(l[2], p)};
    if (r[0] == 0 && r[1] == 0 && r[2] == 0) throw BadPrime("a line vanishes modulo " + std::to_string(p));
    ls.push_back(r);
  }
  auto cross_p = [p](const P& u, const P& v) {
    using namespace modarith;
    return P{sub(mul(u[1], v[2], p), mul(u[2], v[1], p), p), sub(mul(u[2], v[0], p), mul(u[0], v[2], p), p),
             sub(mul(u[0], v[1], p), mul(u[1], v[0], p), p)};
  };
  std::map<P, int> seen;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      P c = cross_p(ls[i], ls[j]);
      auto lead = std::find_if(c.begin(), c.end(), [](auto v) { return v != 0; });
      if (lead == c.end()) throw BadPrime("two lines coincide modulo " + std::to_string(p));
      const std::uint64_t s = modarith::inv(*lead, p);
      for (auto& v : c) v = modarith::mul(v, s, p);
      if (seen.count(c)) continue;
      int mult = 0;
      for (const auto& l : ls) {
        using namespace modarith;
        if (add(add(mul(l[0], c[0], p), mul(l[1], c[1], p), p), mul(l[2], c[2], p), p) == 0) ++mult;
      }
      seen.emplace(c, mult);
    }
  std::vector<int> out;
  for (const auto& kv : seen) out.push_back(kv.second);
  std::sort(out.begin(), out.end());
  return out;
}

CurveInput nearly_cuspidal_curve(int r) {
  require(r >= 3, "prop0 needs r >= 3");
  const int d = 2 * r - 1;
  std::string text = "(y^3 - x^2*z)*" + pw("x", r - 3) + "*" + pw("y", r - 1) + " + " + pw("x", d) + " + " + pw("y", d);
  return from_text("prop0", r, text, true);
}

CurveInput two_pencil_arrangement(int r) {
  require(r >= 4, "exm4 needs r >= 4");
  std::vector<Point3> lines;
  for (int j = 1; j <= r - 2; ++j) lines.push_back({1, 0, -j});
  for (int j = 1; j <= r - 2; ++j) lines.push_back({0, 1, -j});
  lines.push_back({0, 0, 1});
  lines.push_back({-1, 1, -1});
  lines.push_back({-1, 1, -2});
  return from_lines("exm4", r, lines, true);
}

CurveInput conic_curve_even(int p) {
  require(p >= 2, "ex1 needs p >= 2");
  const int d = 2 * p;
  return from_text("ex1", p, pw("(x^2 - y*z)", p - 1) + "*y*z + " + pw("x", d) + " + " + pw("y", d), p <= 15);
}

CurveInput conic_curve_odd(int p) {
  require(p >= 2, "ex2 needs p >= 2");
  const int d = 2 * p + 1;
  return from_text("ex2", p, pw("(x^2 - y*z)", p - 1) + "*x*y*z + " + pw("x", d) + " + " + pw("y", d), p <= 15);
}

CurveInput sporadic_curve(int d) {
  static const std::map<int, std::string> curves{
      {6, "(y^2*z - x^3)^2 + x^6 + y^6 + x*y^5"},
      {7, "(y^2*z - x^3)^2*y + x^7 + y^7"},
      {8, "(y^2*z - x^3)^2*x*y + x^8 + y^8"},
      {9, "(y^3*z + x^4)*(x^3*z + y^4)*y + x^9 + y^9"},
      {10, "(y^2*z - x^3 + x^2*y)^3*y + x^10 + y^10"},
  };
  auto it = curves.find(d);
  require(it != curves.end(), "sec44 is defined for d = 6..10");
  return from_text("sec44", d, it->second, true);
}

CurveInput generic_arrangement(int d) {
  require(d >= 3, "generic needs d >= 3");
  // Tangent lines t^2 x - 2t y + z to the conic xz = y^2.
  std::vector<Point3> lines;
  for (int t = 1; t <= d; ++t) lines.push_back({t * t, -2 * t, 1});
  return from_lines("generic", d, lines, d >= 4);
}

CurveInput triple_point_arrangement(int d) {
  require(d >= 6, "s3 needs d >= 6");
  return from_lines("s3", d, triple_point_lines(d), d >= 7);
}

CurveInput quadruple_point_arrangement(int d) {
  require(d >= 8, "s4 needs d >= 8");
  const int k = (d - 2) / 3;
  auto lines = triple_point_lines(2 * k + 3);
  for (int p = 1; p <= k - 1; ++p) lines.push_back(intercept_line(two_pow(p), three_pow(p + 2)));
  const int extra = d - (3 * k + 2);
  if (extra >= 1) lines.push_back({27, -8, 0});
  if (extra >= 2) lines.push_back({1, -1, 0});
  return from_lines("s4", d, lines, d >= 9);
}

CurveInput nodal_cubic() { return from_text("nodal-cubic", 0, "y^2*z - x^2*(x + z)", true); }

CurveInput uninodal_quartic() { return from_text("uninodal-quartic", 0, "x^4 + y^4 + x*y*z^2", false); }

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog{
      {"prop0", "r", 3, std::nullopt, "(y^3 - x^2 z) x^(r-3) y^(r-1) + x^d + y^d, d = 2r-1"},
      {"exm4", "r", 4, std::nullopt, "2r-1 lines x-jz, y-jz (j <= r-2), z, y-x-z, y-x-2z"},
      {"ex1", "p", 2, std::nullopt, "(x^2 - yz)^(p-1) yz + x^d + y^d, d = 2p"},
      {"ex2", "p", 2, std::nullopt, "(x^2 - yz)^(p-1) xyz + x^d + y^d, d = 2p+1"},
      {"sec44", "d", 6, 10, "hardcoded curves of type (d, d-2)"},
      {"generic", "d", 3, std::nullopt, "d tangent lines to a smooth conic"},
      {"s3", "d", 6, std::nullopt, "lines built from a_n = 2^n, b_n = 3^n, double and triple points"},
      {"s4", "d", 8, std::nullopt, "s3 lines plus extra lines, points of multiplicity up to 4"},
      {"nodal-cubic", "-", 0, 0, "y^2 z - x^2 (x + z)"},
      {"uninodal-quartic", "-", 0, 0, "x^4 + y^4 + x y z^2"},
  };
  return catalog;
}

CurveInput make_family(const std::string& name, int param) {
  if (name == "prop0") return nearly_cuspidal_curve(param);
  if (name == "exm4") return two_pencil_arrangement(param);
  if (name == "ex1") return conic_curve_even(param);
  if (name == "ex2") return conic_curve_odd(param);
  if (name == "sec44") return sporadic_curve(param);
  if (name == "generic") return generic_arrangement(param);
  if (name == "s3") return triple_point_arrangement(param);
  if (name == "s4") return quadruple_point_arrangement(param);
  if (name == "nodal-cubic") return nodal_cubic();
  if (name == "uninodal-quartic") return uninodal_quartic();
  throw DomainError("unknown family '" + name + "'");
}

int family_degree(const std::string& name, int param) {
  if (name == "prop0" || name == "exm4") return 2 * param - 1;
  if (name == "ex1") return 2 * param;
  if (name == "ex2") return 2 * param + 1;
  if (name == "nodal-cubic") return 3;
  if (name == "uninodal-quartic") return 4;
  return param;
}

HomogPoly<PrimeField> reduce_input(const CurveInput& in, const PrimeField& field) {
  if (in.arrangement) {
    std::vector<int> exact;
    for (const auto& pt : lattice(*in.arrangement).points) exact.push_back(pt.multiplicity);
    std::sort(exact.begin(), exact.end());
    if (lattice_multiplicities_mod(*in.arrangement, field.modulus()) != exact)
      throw BadPrime("intersection lattice changes modulo " + std::to_string(field.modulus()));
  }
  return map_to(field, in.poly);
}

}  // namespace jacsyz

#include <sstream>

#include "jacsyz/monomial.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

std::vector<Monomial> monomial_basis(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  out.reserve(dim_forms(k));
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

std::string to_string(const Monomial& m) {
  std::string s;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  put('x', m.a);
  put('y', m.b);
  put('z', m.c);
  return s.empty() ? "1" : s;
}

namespace {

template <class F, class IsNegative, class Abs>
std::string format_terms(const HomogPoly<F>& p, IsNegative is_negative, Abs abs_string) {
  const F& k = p.field();
  auto basis = monomial_basis(p.degree());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (k.is_zero(c)) continue;
    bool neg = is_negative(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mag = abs_string(c);
    std::string mono = to_string(basis[i]);
    if (mono == "1") {
      os << mag;
    } else {
      if (mag != "1") os << mag << '*';
      os << mono;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string format(const HomogPoly<RationalField>& p) {
  return format_terms(
      p, [](const mpq_class& c) { return sgn(c) < 0; }, [](const mpq_class& c) { return mpq_class(abs(c)).get_str(); });
}

std::string format(const HomogPoly<PrimeField>& p) {
  return format_terms(
      p, [](std::uint64_t) { return false; }, [](std::uint64_t c) { return std::to_string(c); });
}

}  // namespace jacsyz

#pragma once

// The du Plessis-Wall bound, maximal Tjurina classification and the
// structural statements about maximal Tjurina curves, checked on computed data.

#include <optional>
#include <string>
#include <vector>

#include "jacsyz/families.hpp"
#include "jacsyz/syzygy.hpp"

namespace jacsyz {

/// Upper bound for tau of a reduced degree-d curve with mdr = r:
/// (d-1)(d-r-1) + r^2, minus C(2r-d+2, 2) when r >= d/2.
/// Throws DomainError unless d >= 1 and 1 <= r <= d-1.
long tau_max(int d, int r);

/// True when the second branch (r >= d/2) applies.
bool tau_max_upper_branch(int d, int r);

enum class CurveClass { PencilOfLines, Smooth, Free, NearlyFree, MaximalTjurina, Plain };

std::string to_string(CurveClass c);
CurveClass curve_class_from_string(const std::string& s);

struct Classification {
  CurveClass cls = CurveClass::Plain;
  bool is_free = false;
  bool is_nearly_free = false;        // m = 3, d_2 = d_3, d_1 + d_2 = d
  bool is_maximal_tjurina = false;    // tau = tau_max(d, mdr)
  std::optional<long> tau_max;        // absent for pencils and d < 3
  std::string type;                   // "(d,r)" when maximal Tjurina

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// One class per curve, in the order pencil, smooth, free, maximal Tjurina,
/// nearly free, plain. Throws ConsistencyError if tau exceeds tau_max or a
/// free curve with r < d/2 misses it.
Classification classify(const ResolutionSummary& s);

/// Whether the maximal-Tjurina equivalence holds on this curve: tau = tau_max
/// iff all m = 2r-d+3 exponents equal r; the forward direction also demands
/// relation degrees r+1. Throws DomainError when r < d/2.
bool verify_maximal_equivalence(const ResolutionSummary& s);

/// ct = st = d+r-2 and all relation degrees r+1. Throws DomainError unless
/// the curve is maximal Tjurina with r >= d/2.
bool verify_thresholds(const ResolutionSummary& s);

/// deg Z = C(2r-d+2, 2), expected for maximal Tjurina curves.
long bourbaki_equality_value(int d, int r);

/// Violations of the structural properties every reduced curve satisfies;
/// empty when all hold. The lattice adds the arrangement-specific checks.
std::vector<std::string> property_violations(const ResolutionSummary& s, const GradedDims& dims,
                                             const LatticeSummary* lattice);

/// Generator and Euler-relation certificates, re-evaluated exactly.
template <Field F>
std::vector<std::string> certificate_violations(const HomogPoly<F>& f, const SyzygyAnalysis<F>& a) {
  std::vector<std::string> out;
  JacobianData<F> jd(f);
  const F& k = f.field();
  auto euler = mul(HomogPoly<F>::variable(k, Variable::X), jd.fx) + mul(HomogPoly<F>::variable(k, Variable::Y), jd.fy) +
               mul(HomogPoly<F>::variable(k, Variable::Z), jd.fz);
  if (!(euler == f.scaled(k.from_int(f.degree())))) out.push_back("Euler relation fails");
  for (std::size_t j = 0; j < a.generators.size(); ++j)
    if (!is_syzygy(jd, a.generators[j])) out.push_back("generator " + std::to_string(j) + " is not a syzygy");
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto& rel = a.relations[i];
    for (int part = 0; part < 3; ++part) {
      HomogPoly<F> acc(k, rel.degree);
      for (std::size_t j = 0; j < rel.coeffs.size(); ++j) acc = acc + mul(rel.coeffs[j], a.generators[j].component(part));
      if (!acc.is_zero()) {
        out.push_back("relation " + std::to_string(i) + " does not vanish");
        break;
      }
    }
  }
  return out;
}

}  // namespace jacsyz

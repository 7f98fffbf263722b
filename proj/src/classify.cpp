#include "jacsyz/classify.hpp"

#include <algorithm>

namespace jacsyz {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

bool tau_max_upper_branch(int d, int r) { return 2 * r >= d; }

long tau_max(int d, int r) {
  if (d < 1 || r < 1 || r > d - 1)
    throw DomainError("tau_max needs 1 <= r <= d-1, got d=" + std::to_string(d) + ", r=" + std::to_string(r));
  long v = static_cast<long>(d - 1) * (d - r - 1) + static_cast<long>(r) * r;
  if (tau_max_upper_branch(d, r)) v -= binom2(2 * r - d + 2);
  return v;
}

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::PencilOfLines: return "PencilOfLines";
    case CurveClass::Smooth: return "Smooth";
    case CurveClass::Free: return "Free";
    case CurveClass::NearlyFree: return "NearlyFree";
    case CurveClass::MaximalTjurina: return "MaximalTjurina";
    case CurveClass::Plain: return "Plain";
  }
  return "Plain";
}

CurveClass curve_class_from_string(const std::string& s) {
  for (auto c : {CurveClass::PencilOfLines, CurveClass::Smooth, CurveClass::Free, CurveClass::NearlyFree,
                 CurveClass::MaximalTjurina, CurveClass::Plain})
    if (to_string(c) == s) return c;
  throw DomainError("unknown curve class '" + s + "'");
}

Classification classify(const ResolutionSummary& s) {
  Classification c;
  const int d = s.degree;
  const int r = s.mdr;
  const auto& e = s.exponents;
  c.is_free = s.m() == 2;
  c.is_nearly_free = s.m() == 3 && e[1] == e[2] && e[0] + e[1] == d;
  if (r >= 1 && d >= 3) {
    c.tau_max = tau_max(d, r);
    if (s.tau > *c.tau_max)
      throw ConsistencyError("tau = " + std::to_string(s.tau) + " exceeds tau_max(" + std::to_string(d) + "," +
                             std::to_string(r) + ") = " + std::to_string(*c.tau_max));
    c.is_maximal_tjurina = s.tau == *c.tau_max;
    if (c.is_free && 2 * r < d && !c.is_maximal_tjurina)
      throw ConsistencyError("free curve with r < d/2 below tau_max");
  }
  if (c.is_maximal_tjurina) c.type = "(" + std::to_string(d) + "," + std::to_string(r) + ")";
  if (r == 0)
    c.cls = CurveClass::PencilOfLines;
  else if (s.tau == 0)
    c.cls = CurveClass::Smooth;
  else if (c.is_free)
    c.cls = CurveClass::Free;
  else if (c.is_maximal_tjurina)
    c.cls = CurveClass::MaximalTjurina;
  else if (c.is_nearly_free)
    c.cls = CurveClass::NearlyFree;
  else
    c.cls = CurveClass::Plain;
  return c;
}

bool verify_maximal_equivalence(const ResolutionSummary& s) {
  const int d = s.degree;
  const int r = s.mdr;
  if (2 * r < d || r > d - 1) throw DomainError("free-range regime: the equivalence needs d/2 <= r <= d-1");
  const bool maximal = s.tau == tau_max(d, r);
  const bool shape = s.m() == 2 * r - d + 3 &&
                     std::all_of(s.exponents.begin(), s.exponents.end(), [r](int x) { return x == r; });
  const bool relations = std::all_of(s.relation_degrees.begin(), s.relation_degrees.end(),
                                     [r](int x) { return x == r + 1; });
  return (!maximal || (shape && relations)) && (!shape || maximal);
}

bool verify_thresholds(const ResolutionSummary& s) {
  const int d = s.degree;
  const int r = s.mdr;
  if (2 * r < d || r > d - 1 || s.tau != tau_max(d, r))
    throw DomainError("the threshold statement applies to maximal Tjurina curves with r >= d/2");
  const bool rel = std::all_of(s.relation_degrees.begin(), s.relation_degrees.end(),
                               [r](int x) { return x == r + 1; });
  return s.ct && *s.ct == d + r - 2 && s.st == d + r - 2 && rel;
}

long bourbaki_equality_value(int d, int r) { return binom2(2 * r - d + 2); }

std::vector<std::string> property_violations(const ResolutionSummary& s, const GradedDims& dims,
                                             const LatticeSummary* lattice) {
  std::vector<std::string> out;
  const int d = s.degree;
  const auto& e = s.exponents;
  const int m = s.m();
  if (m < 2) {
    out.push_back("fewer than two generators");
    return out;
  }
  if (!std::is_sorted(e.begin(), e.end())) out.push_back("exponents not sorted");
  if (d >= 3) {
    const int mid = e[0] + e[1] - d + 3;
    if (!(m <= mid && mid <= e[0] + 2 && e[0] + 2 <= d + 1))
      out.push_back("m <= d1+d2-d+3 <= d1+2 <= d+1 fails for exponents " + join(e));
    if (e[1] > d - 1) out.push_back("d2 > d-1");
    if (e.back() > 2 * d - 4) out.push_back("d_m > 2d-4");
  }
  if (s.is_free) {
    if (e[0] + e[1] != d - 1) out.push_back("free curve with d1+d2 != d-1");
  } else {
    if (static_cast<int>(s.relation_degrees.size()) != m - 2) out.push_back("relation count differs from m-2");
    int sum = 0;
    for (int eps : s.epsilons) {
      if (eps < 1) out.push_back("epsilon < 1");
      sum += eps;
    }
    if (e[0] + e[1] != d - 1 + sum) out.push_back("d1+d2 != d-1+sum(epsilon)");
  }
  for (std::size_t k = 0; k < dims.ar.size(); ++k) {
    long expect = 0;
    for (int dj : e) expect += static_cast<long>(dim_forms(static_cast<int>(k) - dj));
    for (int rel : s.relation_degrees) expect -= static_cast<long>(dim_forms(static_cast<int>(k) - rel));
    if (expect != dims.ar[k]) out.push_back("Hilbert bookkeeping fails in degree " + std::to_string(k));
  }
  bool all_equal = true;
  for (std::size_t k = 0; k < dims.kr.size() && k < dims.ar.size(); ++k) {
    if (dims.kr[k] > dims.ar[k]) out.push_back("dim KR > dim AR in degree " + std::to_string(k));
    all_equal = all_equal && dims.kr[k] == dims.ar[k];
  }
  if (all_equal != (s.tau == 0)) out.push_back("AR = KR up to the ceiling does not match smoothness");
  if (s.mdr >= 1 && d >= 3 && s.tau > tau_max(d, s.mdr)) out.push_back("tau exceeds tau_max");
  if (lattice) {
    if (e.back() > d - 2) out.push_back("arrangement with d_m > d-2");
    if (s.mdr > d - lattice->max_mult) out.push_back("arrangement with mdr > d - max multiplicity");
    if (s.tau != lattice->tau_comb)
      out.push_back("tau = " + std::to_string(s.tau) + " differs from the lattice value " +
                    std::to_string(lattice->tau_comb));
    long pairs = 0;
    for (const auto& p : lattice->points) pairs += binom2(p.multiplicity);
    if (pairs != binom2(d)) out.push_back("lattice pair count differs from C(d,2)");
  }
  return out;
}

}  // namespace jacsyz

#pragma once

// Minimal free resolution data of the Jacobian syzygy module AR(f).
//
// The module is swept degree by degree. In degree k the number of new minimal
// generators is dim AR(f)_k minus the dimension of the span of all monomial
// multiples of the generators found so far, and the same count one level up
// gives the minimal relations among the generators. Ranks are taken in a
// working prime field; every generator and relation that is kept is lifted
// to the coefficient field and re-verified exactly, and the rank identities
// it satisfies pin the working-field ranks to the exact ones.

#include <optional>
#include <string>
#include <vector>

#include "jacsyz/jacobian.hpp"

namespace jacsyz {

struct AnalysisOptions {
  /// Generator search ceiling; defaults to 2d - 4 (d - 1 for conics and lines).
  std::optional<int> kmax;
  /// Compute the Bourbaki ideal of non-free curves.
  bool bourbaki = true;
};

/// Per-degree dimensions, indexed by k. `ar` and `kr` run to the generator
/// search ceiling, `milnor` and `smooth_milnor` to past the stable degree.
struct GradedDims {
  std::vector<long> ar;
  std::vector<long> kr;
  std::vector<long> milnor;
  std::vector<long> smooth_milnor;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

struct ResolutionSummary {
  int degree = 0;
  int mdr = 0;
  std::vector<int> exponents;         // d_1 <= ... <= d_m
  std::vector<int> relation_degrees;  // e'_1 <= ... <= e'_{m-2}, in the grading of AR(f)
  std::vector<int> epsilons;          // e'_j - d_{j+2}
  long tau = 0;
  std::optional<int> ct;              // nullopt for smooth curves
  int st = 0;
  bool is_free = false;
  std::optional<int> mdr_prime;       // nullopt when AR(f) = KR(f) up to the ceiling
  int stable_degree = 0;              // from here on dim M(f)_k is constant
  int kmax = 0;                       // generator search ceiling used

  int m() const { return static_cast<int>(exponents.size()); }
  friend bool operator==(const ResolutionSummary&, const ResolutionSummary&) = default;
};

/// Ideal B(C, rho_1) of the curve and the degree of its zero scheme Z.
struct BourbakiData {
  std::string rho1;                   // the syzygy used, as "(a, b, c)"
  std::vector<int> generator_degrees; // degrees of the nonzero g_j
  std::vector<long> hilbert;          // C(k+2,2) - dim I_k for k = 0, 1, ...
  int stable_from = -1;               // first degree of the final plateau
  long deg_z = 0;
  long predicted = 0;                 // (d-1)^2 - r(d-r-1) - tau

  friend bool operator==(const BourbakiData&, const BourbakiData&) = default;
};

/// sum_j coeffs[j] * generators[j] = 0, with deg coeffs[j] = degree - d_j.
/// Generators of degree >= `degree` do not take part and are not listed.
template <Field F>
struct Relation {
  int degree = 0;
  std::vector<HomogPoly<F>> coeffs;
};

template <Field F>
struct SyzygyAnalysis {
  ResolutionSummary summary;
  GradedDims dims;
  std::vector<SyzygyTriple<F>> generators;  // minimal, in degree order
  std::vector<Relation<F>> relations;       // minimal, in degree order
  std::optional<BourbakiData> bourbaki;
};

/// Minimal generators and relations of AR(f), certified as described above.
/// Throws StructureError when f is not reduced (or the data contradict the
/// structure theory), InternalError on impossible linear-algebra outcomes.
template <Field F>
struct Resolution {
  std::vector<SyzygyTriple<F>> generators;
  std::vector<Relation<F>> relations;
  std::vector<long> ar;  // dim AR(f)_k for k = 0 .. last swept degree
  int kmax = 0;
};

template <Field F>
Resolution<F> resolve(const JacobianData<F>& jd, const AnalysisOptions& opts = {});

/// Exponents d_1..d_m of the minimal generators (m is the size).
template <Field F>
std::vector<int> minimal_exponents(const JacobianData<F>& jd);

/// Relation degrees e'_j and epsilons e'_j - d_{j+2}. Requires m >= 3.
struct RelationDegrees {
  std::vector<int> degrees;
  std::vector<int> epsilons;
};
template <Field F>
RelationDegrees relation_degrees(const JacobianData<F>& jd, const Resolution<F>& res);

/// Coefficients (c2, c1, c0) of the alternating binomial sum
/// dim S_k - 3 dim S_{k+1-d} + sum_j dim S_{k+1-d-d_j} - sum_i dim S_{k+1-d-e'_i}
/// as a polynomial in k, valid for k >= stable_degree(...).
struct QuadraticInK {
  long c2 = 0;  // times 2
  long c1 = 0;  // times 2
  long c0 = 0;  // times 2
};
QuadraticInK resolution_polynomial(int d, const std::vector<int>& exponents, const std::vector<int>& relations);
int stable_degree(int d, const std::vector<int>& exponents, const std::vector<int>& relations);

/// tau(C), computed from the stable Milnor dimension and from the resolution
/// polynomial; throws ConsistencyError if they differ, StructureError if the
/// polynomial is not constant (f not reduced).
template <Field F>
long tjurina(const JacobianData<F>& jd, const ResolutionSummary& summary);

/// (ct, st) given tau and the resolution data; ct is nullopt for smooth curves.
template <Field F>
std::pair<std::optional<int>, int> thresholds(const JacobianData<F>& jd, const ResolutionSummary& summary);

/// Bourbaki ideal of a non-free curve from its first minimal generator.
/// Throws FreeCurve when m = 2 and ConsistencyError when deg Z disagrees with
/// (d-1)^2 - r(d-r-1) - tau.
template <Field F>
BourbakiData bourbaki_degree(const JacobianData<F>& jd, const Resolution<F>& res, long tau);

/// Full analysis: resolution, tau, thresholds, graded tables, Bourbaki ideal.
template <Field F>
SyzygyAnalysis<F> analyze(const HomogPoly<F>& f, const AnalysisOptions& opts = {});

/// "(a, b, c)" in canonical polynomial text.
template <Field F>
std::string format(const SyzygyTriple<F>& s);

#define JACSYZ_SYZYGY_EXTERN(F)                                                                       \
  extern template Resolution<F> resolve(const JacobianData<F>&, const AnalysisOptions&);            \
  extern template std::vector<int> minimal_exponents(const JacobianData<F>&);                        \
  extern template RelationDegrees relation_degrees(const JacobianData<F>&, const Resolution<F>&);    \
  extern template long tjurina(const JacobianData<F>&, const ResolutionSummary&);                    \
  extern template std::pair<std::optional<int>, int> thresholds(const JacobianData<F>&,              \
                                                                const ResolutionSummary&);           \
  extern template BourbakiData bourbaki_degree(const JacobianData<F>&, const Resolution<F>&, long); \
  extern template SyzygyAnalysis<F> analyze(const HomogPoly<F>&, const AnalysisOptions&);           \
  extern template std::string format(const SyzygyTriple<F>&);
JACSYZ_SYZYGY_EXTERN(RationalField)
JACSYZ_SYZYGY_EXTERN(PrimeField)
#undef JACSYZ_SYZYGY_EXTERN

}  // namespace jacsyz

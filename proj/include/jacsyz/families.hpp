#pragma once

// Exact constructors for the curve families studied here, and the
// intersection lattice of a line arrangement.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacsyz/poly.hpp"

namespace jacsyz {

using Point3 = std::array<mpq_class, 3>;

/// Distinct lines alpha x + beta y + gamma z, each normalized so that its
/// first nonzero coefficient is 1.
class LineArrangement {
 public:
  /// Throws DomainError on a zero triple or two proportional lines.
  explicit LineArrangement(const std::vector<Point3>& lines);

  const std::vector<Point3>& lines() const { return lines_; }
  int degree() const { return static_cast<int>(lines_.size()); }

  /// Product of the lines, each first scaled to coprime integer coefficients
  /// with a positive leading coefficient.
  HomogPoly<RationalField> polynomial() const;

 private:
  std::vector<Point3> lines_;
};

/// Projective point normalized like a line (first nonzero coordinate 1).
Point3 normalize_projective(Point3 v);

struct LatticePoint {
  Point3 point;
  int multiplicity = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticeSummary {
  std::vector<LatticePoint> points;  // sorted by point
  std::map<int, int> counts;         // multiplicity -> number of points
  long tau_comb = 0;                 // sum (m_P - 1)^2
  int max_mult = 0;

  friend bool operator==(const LatticeSummary&, const LatticeSummary&) = default;
};

/// Intersection points of at least two lines, from pairwise cross products.
LatticeSummary lattice(const LineArrangement& a);

/// Number of lines through each intersection point after reduction mod p,
/// sorted. Throws BadPrime if a line vanishes or two lines coincide mod p.
std::vector<int> lattice_multiplicities_mod(const LineArrangement& a, std::uint64_t p);

struct CurveInput {
  std::string family;  // family name, or "poly" for free text
  int param = 0;
  HomogPoly<RationalField> poly;
  std::optional<LineArrangement> arrangement;
  /// Inside the parameter range for which the maximal Tjurina property is claimed.
  bool claimed = true;
};

CurveInput nearly_cuspidal_curve(int r);
CurveInput two_pencil_arrangement(int r);
CurveInput conic_curve_even(int p);
CurveInput conic_curve_odd(int p);
CurveInput sporadic_curve(int d);
CurveInput generic_arrangement(int d);
CurveInput triple_point_arrangement(int d);
CurveInput quadruple_point_arrangement(int d);
CurveInput nodal_cubic();
CurveInput uninodal_quartic();

struct FamilyInfo {
  std::string name;
  std::string param;   // meaning of the parameter
  int min = 0;
  std::optional<int> max;
  std::string summary;
};

const std::vector<FamilyInfo>& family_catalog();

/// Family by name; throws DomainError on an unknown name or a bad parameter.
CurveInput make_family(const std::string& name, int param);

/// Degree of the curve the family produces for a parameter.
int family_degree(const std::string& name, int param);

/// Image over Z/p. For arrangements the prime is rejected (BadPrime) unless
/// the lines stay distinct and the lattice multiplicities are unchanged.
HomogPoly<PrimeField> reduce_input(const CurveInput& in, const PrimeField& field);

}  // namespace jacsyz

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotpoly/laurent.hpp"

// A-polynomials A_{2n}(L, M) of the two-bridge knots C(2n, 3).
//
// apoly_theorem sums the closed formula directly; apoly_substitution
// substitutes the longitude relation x = x(L, M) into P_{2n} and clears
// denominators. Both are unit-normalized (see normalize_unit), so equality
// of the two results is plain equality of LaurentPoly values.
namespace knotpoly {

enum class ApolyPath { Theorem, Substitution };

struct APolyResult {
  std::int64_t n = 0;
  LaurentPoly poly;  // in L and M only, unit-normal
  ApolyPath path = ApolyPath::Theorem;
};

/// x = -(1 + L M^(6+4n)) / (M^2 (1 + L M^(2+4n)))
RationalExpr substitution_x(std::int64_t n);

APolyResult apoly_substitution(std::int64_t n);

/// Throws std::logic_error if the summed formula is not already
/// unit-normal, which would mean a bookkeeping bug.
APolyResult apoly_theorem(std::int64_t n);

/// The M-only coefficient sum that pins the extreme L-coefficient of
/// A_{2n}: equals 1 for n >= 0 and M^4 for n < 0.
LaurentPoly c_sum(std::int64_t n);

/// L-degree of A_{2n}: 3n for n >= 0, -3n-1 for n < 0.
std::int64_t apoly_l_degree(std::int64_t n);

/// Edge slope dM/dL as an exact rational, or vertical.
struct Slope {
  bool infinite = false;
  mpq_class value;

  /// "p/q" in lowest terms ("4" when q = 1), or "inf".
  std::string str() const;
  bool operator==(const Slope& other) const {
    return infinite == other.infinite && (infinite || value == other.value);
  }
};

using LatticePoint = std::pair<std::int64_t, std::int64_t>;  // (expL, expM)

/// Convex hull of the (expL, expM) exponent points, counterclockwise from
/// the lexicographically least vertex, collinear points dropped. A hull
/// with k >= 3 vertices has k edges; two vertices give a single edge.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;
  std::vector<Slope> edge_slopes;

  bool operator==(const NewtonPolygon&) const = default;
};

/// Ignores the x exponent. Throws std::invalid_argument on the zero
/// polynomial.
NewtonPolygon newton_polygon(const LaurentPoly& p);
NewtonPolygon newton_polygon(const APolyResult& a);

/// {"vertices":[[l,m],...],"slopes":["p/q"|"inf",...]}
std::string newton_to_json(const NewtonPolygon& polygon);

}  // namespace knotpoly

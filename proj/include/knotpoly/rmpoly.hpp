#pragma once

#include <cstdint>

#include "knotpoly/laurent.hpp"

// Riley-Mednykh polynomials P_{2n}(x, M) of the two-bridge knots C(2n, 3).
//
// Two constructions are provided and must agree exactly: the three-term
// recursion seeded by P_{-2}, P_0, P_2, and the closed binomial sum.
//
// n = 0 takes the n >= 0 branch and yields 1, not the M^-2 seed used when
// recursing downward.
namespace knotpoly {

enum class RmPath { Recursive, Closed };

struct RMResult {
  std::int64_t n = 0;
  LaurentPoly poly;  // in x and M only
  RmPath path = RmPath::Closed;
};

/// floor(a / b) for b > 0, correct for negative a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// Binomial coefficient extended by zero: C(a, b) for 0 <= b <= a, else 0.
mpz_class binom_z(std::int64_t a, std::int64_t b);

/// Q = -M^4 x^3 + (-2M^6 + 2M^4 - 2M^2) x^2 + (-M^8 + 2M^6 - 3M^4 + 2M^2 - 1) x + 2M^4
LaurentPoly q_poly();

/// M^2 + M^-2 + x - 1, the building block of the closed form and of Q.
LaurentPoly rm_base();

RMResult rm_recursive(std::int64_t n);
RMResult rm_closed(std::int64_t n);

/// Degree in x of P_{2n}: 3n for n >= 1, -3n-1 for n <= -1, 0 for n = 0.
std::int64_t rm_x_degree(std::int64_t n);

}  // namespace knotpoly

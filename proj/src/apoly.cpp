#include "knotpoly/apoly.hpp"

#include <stdexcept>

#include "knotpoly/kernels.hpp"
#include "knotpoly/rmpoly.hpp"

namespace knotpoly {
namespace {

LaurentPoly lm(std::int64_t l, std::int64_t m, long c = 1) {
  return LaurentPoly::monomial({l, m, 0}, c);
}

}  // namespace

RationalExpr substitution_x(std::int64_t n) {
  LaurentPoly num = -(LaurentPoly(1) + lm(1, 6 + 4 * n));
  LaurentPoly den = lm(0, 2) * (LaurentPoly(1) + lm(1, 2 + 4 * n));
  return {std::move(num), std::move(den)};
}

std::int64_t apoly_l_degree(std::int64_t n) {
  return n >= 0 ? 3 * n : -3 * n - 1;
}

APolyResult apoly_substitution(std::int64_t n) {
  const RMResult rm = rm_closed(n);
  const LaurentPoly cleared =
      substitute(rm.poly, Var::X, substitution_x(n), rm.poly.degree(Var::X));
  return {n, normalize_unit(cleared).poly, ApolyPath::Substitution};
}

APolyResult apoly_theorem(std::int64_t n) {
  const LaurentPoly one(1);
  LaurentPoly sum;
  if (n >= 0) {
    // term i: C(n + floor(i/2), i) ((L M^4n - 1)(1 - M^2))^i (1 + L M^(6+4n))^f
    //         * M^(-2n-2f) (1 + L M^(2+4n))^(3n-i-f),  f = floor((1+i)/2)
    const LaurentPoly ratio = (lm(1, 4 * n) - one) * (one - lm(0, 2));
    const LaurentPoly upper = one + lm(1, 6 + 4 * n);
    const LaurentPoly lower = one + lm(1, 2 + 4 * n);
    sum = kernels::sum_parallel(static_cast<std::size_t>(2 * n + 1), [&](std::size_t idx) {
      const auto i = static_cast<std::int64_t>(idx);
      const std::int64_t f = floor_div(1 + i, 2);
      const mpz_class c = binom_z(n + floor_div(i, 2), i);
      if (c == 0) return LaurentPoly{};
      const std::int64_t spare = 3 * n - i - f;
      if (spare < 0) throw std::logic_error("apoly_theorem: negative aggregate exponent");
      LaurentPoly term = pow(ratio, i) * pow(upper, f) * pow(lower, spare);
      return shift(scale(term, c), {0, -2 * n - 2 * f, 0});
    });
  } else {
    // term i: C(-n + floor((i-1)/2), i) ((1 - M^2)(M^-4n - L))^i (L M^6 + M^-4n)^f
    //         * M^(8n+6-2f) (L M^2 + M^-4n)^(-3n-1-i-f)
    const LaurentPoly ratio = (one - lm(0, 2)) * (lm(0, -4 * n) - lm(1, 0));
    const LaurentPoly upper = lm(1, 6) + lm(0, -4 * n);
    const LaurentPoly lower = lm(1, 2) + lm(0, -4 * n);
    sum = kernels::sum_parallel(static_cast<std::size_t>(-2 * n), [&](std::size_t idx) {
      const auto i = static_cast<std::int64_t>(idx);
      const std::int64_t f = floor_div(1 + i, 2);
      const mpz_class c = binom_z(-n + floor_div(i - 1, 2), i);
      if (c == 0) return LaurentPoly{};
      const std::int64_t spare = -3 * n - 1 - i - f;
      if (spare < 0) throw std::logic_error("apoly_theorem: negative aggregate exponent");
      LaurentPoly term = pow(ratio, i) * pow(upper, f) * pow(lower, spare);
      return shift(scale(term, c), {0, 8 * n + 6 - 2 * f, 0});
    });
  }

  const UnitNormalForm normal = normalize_unit(sum);
  if (!normal.unit.is_one() || normal.sign != 1) {
    throw std::logic_error("apoly_theorem: summed formula is not unit-normal");
  }
  return {n, normal.poly, ApolyPath::Theorem};
}

LaurentPoly c_sum(std::int64_t n) {
  const LaurentPoly m2_minus_1 = lm(0, 2) - LaurentPoly(1);
  if (n >= 0) {
    return kernels::sum_reference(static_cast<std::size_t>(2 * n + 1), [&](std::size_t idx) {
      const auto i = static_cast<std::int64_t>(idx);
      const mpz_class c = binom_z(n + floor_div(i, 2), i);
      if (c == 0) return LaurentPoly{};
      const std::int64_t f = floor_div(1 + i, 2);
      return shift(scale(pow(m2_minus_1, i), c), {0, -2 * f - 2 * n, 0});
    });
  }
  return kernels::sum_reference(static_cast<std::size_t>(-2 * n), [&](std::size_t idx) {
    const auto i = static_cast<std::int64_t>(idx);
    const mpz_class c = binom_z(-n + floor_div(i - 1, 2), i);
    if (c == 0) return LaurentPoly{};
    const std::int64_t f = floor_div(1 + i, 2);
    return shift(scale(pow(m2_minus_1, i), c), {0, 2 * n + 4 - 2 * i + 2 * f, 0});
  });
}

}  // namespace knotpoly

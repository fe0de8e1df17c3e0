#include "knotpoly/rmpoly.hpp"

#include <algorithm>
#include <utility>

#include "knotpoly/kernels.hpp"

namespace knotpoly {
namespace {

LaurentPoly mx(std::int64_t m, std::int64_t x, long c) {
  return LaurentPoly::monomial({0, m, x}, c);
}

LaurentPoly printed_p2() {
  return LaurentPoly::from_terms({
      {{0, 4, 3}, -1},
      {{0, 6, 2}, -2}, {{0, 4, 2}, 1}, {{0, 2, 2}, -2},
      {{0, 8, 1}, -1}, {{0, 6, 1}, 1}, {{0, 4, 1}, -2}, {{0, 2, 1}, 1}, {{0, 0, 1}, -1},
      {{0, 4, 0}, 1},
  });
}

LaurentPoly printed_pm2() {
  return LaurentPoly::from_terms({
      {{0, 2, 2}, 1},
      {{0, 4, 1}, 1}, {{0, 2, 1}, -1}, {{0, 0, 1}, 1},
      {{0, 2, 0}, 1},
  });
}

}  // namespace

mpz_class binom_z(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  const std::int64_t k = std::min(b, a - b);
  mpz_class result = 1;
  // result stays C(a - k + i, i) after step i, so each division is exact
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(a - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

LaurentPoly q_poly() {
  return LaurentPoly::from_terms({
      {{0, 4, 3}, -1},
      {{0, 6, 2}, -2}, {{0, 4, 2}, 2}, {{0, 2, 2}, -2},
      {{0, 8, 1}, -1}, {{0, 6, 1}, 2}, {{0, 4, 1}, -3}, {{0, 2, 1}, 2}, {{0, 0, 1}, -1},
      {{0, 4, 0}, 2},
  });
}

LaurentPoly rm_base() {
  return mx(2, 0, 1) + mx(-2, 0, 1) + mx(0, 1, 1) - LaurentPoly(1);
}

std::int64_t rm_x_degree(std::int64_t n) {
  if (n >= 1) return 3 * n;
  if (n <= -1) return -3 * n - 1;
  return 0;
}

RMResult rm_recursive(std::int64_t n) {
  RMResult out{n, {}, RmPath::Recursive};
  if (n == 0) {
    out.poly = LaurentPoly(1);
    return out;
  }
  const LaurentPoly q = q_poly();
  const LaurentPoly m8 = mx(8, 0, 1);
  LaurentPoly prev = n > 0 ? LaurentPoly(1) : mx(-2, 0, 1);
  LaurentPoly cur = n > 0 ? printed_p2() : printed_pm2();
  const std::int64_t steps = n > 0 ? n : -n;
  for (std::int64_t k = 2; k <= steps; ++k) {
    LaurentPoly next = q * cur - m8 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.poly = std::move(cur);
  return out;
}

RMResult rm_closed(std::int64_t n) {
  RMResult out{n, {}, RmPath::Closed};
  const LaurentPoly minus_x = mx(0, 1, -1);
  if (n >= 0) {
    const LaurentPoly base = rm_base();
    out.poly = kernels::sum_parallel(
        static_cast<std::size_t>(2 * n + 1), [&](std::size_t idx) {
          const auto i = static_cast<std::int64_t>(idx);
          const mpz_class c = binom_z(n + floor_div(i, 2), i);
          if (c == 0) return LaurentPoly{};
          LaurentPoly term = pow(base, i) * pow(minus_x, floor_div(1 + i, 2));
          return shift(scale(term, c), {0, 4 * n, 0});
        });
  } else {
    const LaurentPoly base = -rm_base();
    out.poly = kernels::sum_parallel(
        static_cast<std::size_t>(-2 * n), [&](std::size_t idx) {
          const auto i = static_cast<std::int64_t>(idx);
          const mpz_class c = binom_z(-n + floor_div(i - 1, 2), i);
          if (c == 0) return LaurentPoly{};
          LaurentPoly term = pow(base, i) * pow(minus_x, floor_div(1 + i, 2));
          return shift(scale(term, c), {0, -4 * n - 2, 0});
        });
  }
  return out;
}

}  // namespace knotpoly

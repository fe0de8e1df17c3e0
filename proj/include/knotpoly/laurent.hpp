#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotpoly {

/// The three indeterminates every polynomial in this library lives in:
/// the longitude eigenvalue L, the meridian eigenvalue M and the Riley
/// variable x.
enum class Var : std::uint8_t { L, M, X };

char var_name(Var v);

/// Exponent vector over (L, M, x). Any exponent may be negative.
///
/// The defaulted comparison is lexicographic on (l, m, x); that order is the
/// canonical term order used for storage, equality and serialization.
struct Monomial {
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t x = 0;

  auto operator<=>(const Monomial&) const = default;

  std::int64_t exponent(Var v) const;
  void set_exponent(Var v, std::int64_t e);
  bool is_one() const { return l == 0 && m == 0 && x == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.l + b.l, a.m + b.m, a.x + b.x};
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& mono) const noexcept;
};

struct Term {
  Monomial mono;
  mpz_class coeff;

  bool operator==(const Term& other) const {
    return mono == other.mono && coeff == other.coeff;
  }
};

/// Exact sparse Laurent polynomial in L, M, x with big-integer coefficients.
///
/// Terms are kept sorted ascending in monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
/// Values are immutable once built and safe to share between threads.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& constant);

  /// Combines duplicate monomials and drops zeros; input order is irrelevant.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Takes terms that are already sorted, unique and nonzero.
  static LaurentPoly from_canonical(std::vector<Term> terms);
  static LaurentPoly monomial(const Monomial& mono, const mpz_class& coeff = 1);
  static LaurentPoly variable(Var v, std::int64_t exponent = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  mpz_class coeff(const Monomial& mono) const;
  /// Largest exponent of v; 0 for the zero polynomial.
  std::int64_t degree(Var v) const;
  /// Smallest exponent of v; 0 for the zero polynomial.
  std::int64_t min_exponent(Var v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
/// Product; large operands go through the OpenMP kernel.
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const LaurentPoly& p, const mpz_class& factor);
LaurentPoly shift(const LaurentPoly& p, const Monomial& by);
/// p^k for k >= 0; throws std::invalid_argument for negative k.
LaurentPoly pow(const LaurentPoly& p, std::int64_t k);

inline LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
inline LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

/// num / den with den != 0. Not reduced.
class RationalExpr {
 public:
  RationalExpr(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Sub-polynomial of all terms whose exponent of `v` equals `k`, with `v`
/// removed from the result.
LaurentPoly coeff_extract(const LaurentPoly& p, Var v, std::int64_t k);

/// Computes p(v = num/den) * den^clear_deg exactly, i.e.
///   sum_k coeff_extract(p, v, k) * num^k * den^(clear_deg - k).
/// Requires p to have no negative exponent of v and clear_deg >= deg_v(p).
LaurentPoly substitute(const LaurentPoly& p, Var v, const RationalExpr& r,
                       std::int64_t clear_deg);

/// p == sign * L^unit.l * M^unit.m * x^unit.x * poly, where poly has minimum
/// exponent 0 in every variable and its least term (canonical order) has a
/// positive coefficient.
struct UnitNormalForm {
  LaurentPoly poly;
  Monomial unit;
  int sign = 1;
};

UnitNormalForm normalize_unit(const LaurentPoly& p);

/// Value assignment for numeric evaluation. Variables absent from the map
/// are treated as unassigned.
using Assignment = std::map<Var, std::complex<double>>;

struct NumericValue {
  std::complex<double> value;
  /// Sum of |coeff * monomial value| over all terms.
  double magnitude = 0.0;
};

/// Floating-point evaluation with cached integer powers. Throws
/// std::invalid_argument if a variable present in p is unassigned, or if a
/// variable carrying a negative exponent is assigned zero.
/// base^e by repeated squaring; negative e inverts base first.
std::complex<double> int_pow(std::complex<double> base, std::int64_t e);

NumericValue evaluate(const LaurentPoly& p, const Assignment& assign);
std::complex<double> eval_numeric(const LaurentPoly& p, const Assignment& assign);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON: {"terms":[{"l":..,"m":..,"x":..,"c":"<decimal>"},...]}
/// with terms ascending in canonical order.
std::string serialize(const LaurentPoly& p);
/// Inverse of serialize. Accepts terms in any order but rejects duplicate
/// monomials, zero coefficients and non-integer exponents.
LaurentPoly parse(std::string_view json_text);

}  // namespace knotpoly

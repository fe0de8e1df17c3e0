#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpoly/laurent.hpp"

// Numeric check of the symbolic results against the SL(2, C) representation
//
//   rho(s) = [[M, 1], [0, 1/M]],  rho(t) = [[M, 0], [2 - M^2 - M^-2 - x, 1/M]]
//
// of the knot group <s, t | s w t^-1 w^-1>, w = (t s^-1 t s t^-1 s)^n, and the
// longitude l = w w* s^(-4n).
namespace knotpoly {

using Complex = std::complex<double>;

class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeCollapseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Row-major 2x2 complex matrix.
struct Mat2C {
  Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  static Mat2C identity() { return {}; }
  Complex det() const { return a * d - b * c; }
  /// Throws SingularPointError when det == 0.
  Mat2C inverse() const;
  /// Sum of entry magnitudes.
  double entry_sum() const { return std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d); }
  /// Largest entry magnitude of *this - other.
  double max_abs_diff(const Mat2C& other) const;

  friend Mat2C operator*(const Mat2C& x, const Mat2C& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

enum class Gen : std::uint8_t { S, T };

struct Letter {
  Gen gen;
  std::int64_t exp;
  bool operator==(const Letter&) const = default;
};

/// Free-group word in s, t. Always reduced: zero exponents are dropped and
/// adjacent letters on the same generator are merged.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::int64_t exponent_sum() const;

  /// Letter order reversed, exponents kept.
  Word reversed() const;
  Word inverse() const;
  Word& append(const Word& other);
  Word& append(Letter letter);

  std::string str() const;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(Word a, const Word& b);

/// rho(s), rho(t) at (M0, x0). Throws SingularPointError for M0 = 0.
std::pair<Mat2C, Mat2C> rho_matrices(Complex m0, Complex x0);

/// w = (t s^-1 t s t^-1 s)^n; the inverse block repeated |n| times for n < 0.
Word build_w(std::int64_t n);
/// l = w w* s^(-4n).
Word build_longitude(std::int64_t n);
/// s w t^-1 w^-1.
Word build_relator(std::int64_t n);

struct WordValue {
  Mat2C value;
  /// Largest entry_sum() over all prefix products, at least 1.
  double growth = 1.0;
};

/// Ordered product of the letter images. Throws SingularPointError if S or T
/// is singular.
WordValue eval_word_tracked(const Word& word, const Mat2C& s, const Mat2C& t);
Mat2C eval_word(const Word& word, const Mat2C& s, const Mat2C& t);

/// Complex roots of x -> P_{2n}(x, M0), companion-matrix eigenvalues
/// polished by Newton steps. Empty for n = 0. Throws std::domain_error for
/// a zero specialization and DegreeCollapseError if the leading coefficient
/// vanishes at M0.
std::vector<Complex> roots_of_rm(std::int64_t n, Complex m0);

/// L0 = -M0^(-4n-2) (M0^-2 + x0) / (M0^2 + x0). Throws SingularPointError at
/// the pole M0^2 + x0 = 0 or at M0 = 0.
Complex longitude_eigen(std::int64_t n, Complex m0, Complex x0);
/// Inverse of longitude_eigen: x0 = -(1 + L0 M0^(6+4n)) / (M0^2 (1 + L0 M0^(2+4n))).
Complex x_from_longitude(std::int64_t n, Complex l0, Complex m0);

struct VerificationReport {
  std::int64_t n = 0;
  Complex m_sample;
  Complex root;
  Complex longitude;  // L0 from longitude_eigen
  /// max|rho(s w t^-1 w^-1) - I| / relation_growth
  double relation_residual = 0.0;
  /// |rho(l)_11 - L0| / longitude_growth
  double longitude_mismatch = 0.0;
  /// |rho(l)_21| / longitude_growth
  double longitude_offdiag = 0.0;
  /// |A(L0, M0)| / sum of |term values|
  double apoly_residual = 0.0;
  double relation_growth = 1.0;
  double longitude_growth = 1.0;
  double tol = 0.0;
  bool passed = false;
};

/// Full check at one (M0, x0). The A-polynomial is passed in so a grid run
/// can share it; the overload without it computes apoly_theorem(n).
/// Throws std::invalid_argument for n = 0 or tol <= 0.
VerificationReport verify_point(std::int64_t n, Complex m0, Complex x0, double tol,
                                const LaurentPoly& apoly);
VerificationReport verify_point(std::int64_t n, Complex m0, Complex x0, double tol);

/// Reproducible unit-modulus samples, kept at least `margin` radians away
/// from every root of unity of order <= 12.
std::vector<Complex> sample_unit_circle(std::size_t count, std::uint64_t seed,
                                        double margin = 0.02);

/// One (n, sample) cell of a verification grid.
struct GridCell {
  std::int64_t n = 0;
  std::size_t sample_index = 0;
  Complex m_sample;
  bool degenerate = false;  // n == 0: no roots, relator collapses
  std::string error;        // non-empty if the cell could not be evaluated
  std::vector<VerificationReport> reports;  // one per root

  bool passed() const;
};

struct GridOptions {
  std::vector<std::int64_t> ns;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  /// When set, checked instead of apoly_theorem(n) for every n (e.g. a
  /// polynomial read back from JSON).
  const LaurentPoly* apoly_override = nullptr;
};

/// Cells ordered by (n, sample index). The parallel version distributes
/// cells over OpenMP threads; results are identical to the serial one.
std::vector<GridCell> verify_grid_serial(const GridOptions& options);
std::vector<GridCell> verify_grid_parallel(const GridOptions& options);

/// {"seed":..,"tol":..,"samples":..,"all_passed":..,"cells":[...]}
std::string grid_to_json(const GridOptions& options, const std::vector<GridCell>& cells);

}  // namespace knotpoly

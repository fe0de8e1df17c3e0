#include "knotpoly/repcheck.hpp"

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "knotpoly/apoly.hpp"
#include "knotpoly/rmpoly.hpp"

namespace knotpoly {

Mat2C Mat2C::inverse() const {
  const Complex det_value = det();
  if (det_value == Complex(0.0, 0.0)) throw SingularPointError("singular matrix");
  return {d / det_value, -b / det_value, -c / det_value, a / det_value};
}

double Mat2C::max_abs_diff(const Mat2C& other) const {
  return std::max({std::abs(a - other.a), std::abs(b - other.b), std::abs(c - other.c),
                   std::abs(d - other.d)});
}

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& letter : letters) append(letter);
}

Word& Word::append(Letter letter) {
  if (letter.exp == 0) return *this;
  if (!letters_.empty() && letters_.back().gen == letter.gen) {
    letters_.back().exp += letter.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
  return *this;
}

Word& Word::append(const Word& other) {
  for (const auto& letter : other.letters_) append(letter);
  return *this;
}

std::int64_t Word::exponent_sum() const {
  std::int64_t total = 0;
  for (const auto& letter : letters_) total += letter.exp;
  return total;
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return Word(out);
}

std::string Word::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) os << ' ';
    os << (letters_[i].gen == Gen::S ? 's' : 't');
    if (letters_[i].exp != 1) os << '^' << letters_[i].exp;
  }
  return os.str();
}

Word concat(Word a, const Word& b) { return a.append(b); }

std::pair<Mat2C, Mat2C> rho_matrices(Complex m0, Complex x0) {
  if (m0 == Complex(0.0, 0.0)) throw SingularPointError("rho_matrices: M0 = 0");
  const Complex inv = 1.0 / m0;
  Mat2C s{m0, 1.0, 0.0, inv};
  Mat2C t{m0, 0.0, 2.0 - m0 * m0 - inv * inv - x0, inv};
  return {s, t};
}

Word build_w(std::int64_t n) {
  const Word block({{Gen::T, 1}, {Gen::S, -1}, {Gen::T, 1}, {Gen::S, 1}, {Gen::T, -1},
                    {Gen::S, 1}});
  const Word unit = n >= 0 ? block : block.inverse();
  Word w;
  for (std::int64_t k = 0; k < (n >= 0 ? n : -n); ++k) w.append(unit);
  return w;
}

Word build_longitude(std::int64_t n) {
  const Word w = build_w(n);
  Word l = concat(w, w.reversed());
  l.append(Letter{Gen::S, -4 * n});
  return l;
}

Word build_relator(std::int64_t n) {
  const Word w = build_w(n);
  Word r({{Gen::S, 1}});
  r.append(w);
  r.append(Letter{Gen::T, -1});
  r.append(w.inverse());
  return r;
}

WordValue eval_word_tracked(const Word& word, const Mat2C& s, const Mat2C& t) {
  const Mat2C s_inv = s.inverse();
  const Mat2C t_inv = t.inverse();
  WordValue out;
  for (const auto& letter : word.letters()) {
    const Mat2C& step = letter.gen == Gen::S ? (letter.exp > 0 ? s : s_inv)
                                             : (letter.exp > 0 ? t : t_inv);
    for (std::int64_t k = 0; k < std::abs(letter.exp); ++k) {
      out.value = out.value * step;
      out.growth = std::max(out.growth, out.value.entry_sum());
    }
  }
  return out;
}

Mat2C eval_word(const Word& word, const Mat2C& s, const Mat2C& t) {
  return eval_word_tracked(word, s, t).value;
}

namespace {

using ComplexL = std::complex<long double>;

template <class C>
C power(C base, std::int64_t e) {
  if (e < 0) {
    base = C(1) / base;
    e = -e;
  }
  C result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

template <class C>
std::vector<C> specialize_in_x(const LaurentPoly& p, C m0) {
  using Real = typename C::value_type;
  std::vector<C> coeffs(static_cast<std::size_t>(std::max<std::int64_t>(p.degree(Var::X), 0)) + 1);
  std::map<std::int64_t, C> m_pow;
  for (const auto& t : p.terms()) {
    auto [it, inserted] = m_pow.try_emplace(t.mono.m);
    if (inserted) it->second = power(m0, t.mono.m);
    const Real c = t.coeff.fits_slong_p() ? static_cast<Real>(t.coeff.get_si())
                                          : static_cast<Real>(t.coeff.get_d());
    coeffs[static_cast<std::size_t>(t.mono.x)] += c * it->second;
  }
  return coeffs;
}

template <class C>
std::pair<C, C> horner_with_derivative(const std::vector<C>& coeffs, C z) {
  C value(0);
  C deriv(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
  return {value, deriv};
}

std::vector<Complex> roots_of_specialized(const LaurentPoly& p, Complex m0) {
  if (p.min_exponent(Var::X) < 0) throw std::invalid_argument("roots: negative x exponent");
  const std::vector<Complex> coeffs = specialize_in_x(p, m0);
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw std::domain_error("roots: polynomial vanishes identically at M0");
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return {};
  if (std::abs(coeffs[deg]) <= 1e-12 * scale) {
    throw DegreeCollapseError("roots: leading x-coefficient vanishes at M0");
  }

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                      static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  for (std::size_t i = 0; i < deg; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) =
        -coeffs[i] / coeffs[deg];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::domain_error("roots: eigen solver failed");

  // Clustered roots lose digits in double, so polishing runs in long double.
  const std::vector<ComplexL> coeffs_l = specialize_in_x(p, ComplexL(m0));
  std::vector<Complex> roots;
  roots.reserve(deg);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    ComplexL z(solver.eigenvalues()(i));
    for (int iter = 0; iter < 8; ++iter) {
      auto [value, deriv] = horner_with_derivative(coeffs_l, z);
      if (deriv == ComplexL(0)) break;
      const ComplexL candidate = z - value / deriv;
      if (std::abs(horner_with_derivative(coeffs_l, candidate).first) >= std::abs(value)) break;
      z = candidate;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace

std::vector<Complex> roots_of_rm(std::int64_t n, Complex m0) {
  if (n == 0) return {};
  return roots_of_specialized(rm_closed(n).poly, m0);
}

Complex longitude_eigen(std::int64_t n, Complex m0, Complex x0) {
  if (m0 == Complex(0.0, 0.0)) throw SingularPointError("longitude_eigen: M0 = 0");
  const Complex m2 = m0 * m0;
  const Complex pole = m2 + x0;
  if (std::abs(pole) <= 1e-14 * (std::abs(m2) + std::abs(x0))) {
    throw SingularPointError("longitude_eigen: M0^2 + x0 = 0");
  }
  return -int_pow(m0, -4 * n - 2) * (1.0 / m2 + x0) / pole;
}

Complex x_from_longitude(std::int64_t n, Complex l0, Complex m0) {
  const Complex den = m0 * m0 * (1.0 + l0 * int_pow(m0, 2 + 4 * n));
  if (den == Complex(0.0, 0.0)) throw SingularPointError("x_from_longitude: zero denominator");
  return -(1.0 + l0 * int_pow(m0, 6 + 4 * n)) / den;
}

namespace {

struct WordSet {
  Word relator;
  Word longitude;
};

VerificationReport verify_with(std::int64_t n, Complex m0, Complex x0, double tol,
                               const LaurentPoly& apoly, const WordSet& words) {
  if (n == 0) throw std::invalid_argument("verify_point: n = 0 is degenerate");
  if (!(tol > 0.0)) throw std::invalid_argument("verify_point: tol must be positive");

  VerificationReport r;
  r.n = n;
  r.m_sample = m0;
  r.root = x0;
  r.tol = tol;

  const auto [s, t] = rho_matrices(m0, x0);
  const WordValue rel = eval_word_tracked(words.relator, s, t);
  r.relation_growth = rel.growth;
  r.relation_residual = rel.value.max_abs_diff(Mat2C::identity()) / rel.growth;

  r.longitude = longitude_eigen(n, m0, x0);
  const WordValue lon = eval_word_tracked(words.longitude, s, t);
  r.longitude_growth = lon.growth;
  r.longitude_mismatch = std::abs(lon.value.a - r.longitude) / lon.growth;
  r.longitude_offdiag = std::abs(lon.value.c) / lon.growth;

  const NumericValue a = evaluate(apoly, {{Var::L, r.longitude}, {Var::M, m0}});
  r.apoly_residual = a.magnitude > 0.0 ? std::abs(a.value) / a.magnitude : std::abs(a.value);

  r.passed = r.relation_residual <= tol && r.longitude_mismatch <= tol &&
             r.longitude_offdiag <= tol && r.apoly_residual <= tol;
  return r;
}

}  // namespace

VerificationReport verify_point(std::int64_t n, Complex m0, Complex x0, double tol,
                                const LaurentPoly& apoly) {
  return verify_with(n, m0, x0, tol, apoly, {build_relator(n), build_longitude(n)});
}

VerificationReport verify_point(std::int64_t n, Complex m0, Complex x0, double tol) {
  if (n == 0) throw std::invalid_argument("verify_point: n = 0 is degenerate");
  return verify_point(n, m0, x0, tol, apoly_theorem(n).poly);
}

std::vector<Complex> sample_unit_circle(std::size_t count, std::uint64_t seed, double margin) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  out.reserve(count);
  while (out.size() < count) {
    // 53 random bits -> [0, 1), independent of the library's distributions
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double angle = u * kTwoPi;
    bool near_root_of_unity = false;
    for (int order = 1; order <= 12 && !near_root_of_unity; ++order) {
      const double turns = angle * order / kTwoPi;
      const double gap = std::abs(turns - std::round(turns)) * kTwoPi / order;
      near_root_of_unity = gap < margin;
    }
    if (!near_root_of_unity) out.push_back(std::polar(1.0, angle));
  }
  return out;
}

bool GridCell::passed() const {
  if (degenerate) return true;
  if (!error.empty()) return false;
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

namespace {

struct PreparedN {
  LaurentPoly rm;
  LaurentPoly apoly;
  WordSet words;
};

std::vector<PreparedN> prepare(const GridOptions& options) {
  std::vector<PreparedN> prepared(options.ns.size());
  for (std::size_t k = 0; k < options.ns.size(); ++k) {
    const std::int64_t n = options.ns[k];
    if (n == 0) continue;
    prepared[k].rm = rm_closed(n).poly;
    prepared[k].apoly = options.apoly_override ? *options.apoly_override : apoly_theorem(n).poly;
    prepared[k].words = {build_relator(n), build_longitude(n)};
  }
  return prepared;
}

GridCell run_cell(const GridOptions& options, const PreparedN& prep, std::int64_t n,
                  std::size_t sample_index, Complex m0) {
  GridCell cell;
  cell.n = n;
  cell.sample_index = sample_index;
  cell.m_sample = m0;
  if (n == 0) {
    cell.degenerate = true;
    return cell;
  }
  try {
    for (const Complex x0 : roots_of_specialized(prep.rm, m0)) {
      cell.reports.push_back(verify_with(n, m0, x0, options.tol, prep.apoly, prep.words));
    }
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

std::vector<GridCell> verify_grid_serial(const GridOptions& options) {
  const auto samples = sample_unit_circle(options.samples, options.seed);
  const auto prepared = prepare(options);
  std::vector<GridCell> cells;
  for (std::size_t k = 0; k < options.ns.size(); ++k) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      cells.push_back(run_cell(options, prepared[k], options.ns[k], i, samples[i]));
    }
  }
  return cells;
}

std::vector<GridCell> verify_grid_parallel(const GridOptions& options) {
  const auto samples = sample_unit_circle(options.samples, options.seed);
  const auto prepared = prepare(options);
  const std::size_t per_n = samples.size();
  const std::size_t total = options.ns.size() * per_n;
  std::vector<GridCell> cells(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t idx = 0; idx < total; ++idx) {
    const std::size_t k = idx / per_n;
    const std::size_t i = idx % per_n;
    cells[idx] = run_cell(options, prepared[k], options.ns[k], i, samples[i]);
  }
  return cells;
}

namespace {

nlohmann::ordered_json complex_json(Complex z) { return {z.real(), z.imag()}; }

}  // namespace

std::string grid_to_json(const GridOptions& options, const std::vector<GridCell>& cells) {
  nlohmann::ordered_json doc;
  doc["seed"] = options.seed;
  doc["tol"] = options.tol;
  doc["samples"] = options.samples;
  doc["all_passed"] = std::all_of(cells.begin(), cells.end(),
                                  [](const GridCell& c) { return c.passed(); });
  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto& cell : cells) {
    nlohmann::ordered_json c;
    c["n"] = cell.n;
    c["sample"] = cell.sample_index;
    c["M"] = complex_json(cell.m_sample);
    if (cell.degenerate) {
      c["status"] = "degenerate";
    } else if (!cell.error.empty()) {
      c["status"] = "error";
      c["error"] = cell.error;
    } else {
      c["status"] = cell.passed() ? "passed" : "failed";
    }
    c["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : cell.reports) {
      nlohmann::ordered_json j;
      j["root"] = complex_json(r.root);
      j["L"] = complex_json(r.longitude);
      j["relation_residual"] = r.relation_residual;
      j["longitude_mismatch"] = r.longitude_mismatch;
      j["longitude_offdiag"] = r.longitude_offdiag;
      j["apoly_residual"] = r.apoly_residual;
      j["relation_growth"] = r.relation_growth;
      j["longitude_growth"] = r.longitude_growth;
      j["passed"] = r.passed;
      c["reports"].push_back(std::move(j));
    }
    doc["cells"].push_back(std::move(c));
  }
  return doc.dump();
}

}  // namespace knotpoly

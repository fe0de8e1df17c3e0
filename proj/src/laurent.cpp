#include "knotpoly/laurent.hpp"

#include <algorithm>
#include <limits>
#include <regex>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "knotpoly/kernels.hpp"

namespace knotpoly {

char var_name(Var v) {
  switch (v) {
    case Var::L: return 'L';
    case Var::M: return 'M';
    case Var::X: return 'x';
  }
  return '?';
}

std::int64_t Monomial::exponent(Var v) const {
  switch (v) {
    case Var::L: return l;
    case Var::M: return m;
    case Var::X: return x;
  }
  return 0;
}

void Monomial::set_exponent(Var v, std::int64_t e) {
  switch (v) {
    case Var::L: l = e; break;
    case Var::M: m = e; break;
    case Var::X: x = e; break;
  }
}

std::size_t MonomialHash::operator()(const Monomial& mono) const noexcept {
  // splitmix-style mixing of the three exponents
  auto mix = [](std::uint64_t h) {
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
  };
  std::uint64_t h = mix(static_cast<std::uint64_t>(mono.l));
  h = mix(h ^ static_cast<std::uint64_t>(mono.m));
  h = mix(h ^ static_cast<std::uint64_t>(mono.x));
  return static_cast<std::size_t>(h);
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({Monomial{}, mpz_class(constant)});
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

LaurentPoly LaurentPoly::from_canonical(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& mono, const mpz_class& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, std::int64_t exponent) {
  Monomial mono;
  mono.set_exponent(v, exponent);
  return monomial(mono);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

mpz_class LaurentPoly::coeff(const Monomial& mono) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return 0;
}

std::int64_t LaurentPoly::degree(Var v) const {
  if (terms_.empty()) return 0;
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::int64_t LaurentPoly::min_exponent(Var v) const {
  if (terms_.empty()) return 0;
  std::int64_t d = std::numeric_limits<std::int64_t>::max();
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two canonical term lists, sign = +1 or -1 on the right operand.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : mpz_class(-b[j].coeff)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a[i].coeff + b[j].coeff) : mpz_class(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = mul(*this, other);
  return *this;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return p - q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.size() == 1) return shift(scale(q, p.terms().front().coeff), p.terms().front().mono);
  if (q.size() == 1) return shift(scale(p, q.terms().front().coeff), q.terms().front().mono);
  if (p.size() * q.size() >= kernels::kParallelMulThreshold) {
    return kernels::mul_parallel(p, q);
  }
  return kernels::mul_reference(p, q);
}

LaurentPoly scale(const LaurentPoly& p, const mpz_class& factor) {
  if (factor == 0) return {};
  std::vector<Term> out = p.terms();
  for (auto& t : out) t.coeff *= factor;
  return LaurentPoly::from_canonical(std::move(out));
}

LaurentPoly shift(const LaurentPoly& p, const Monomial& by) {
  // multiplying by a monomial preserves the lexicographic order
  std::vector<Term> out = p.terms();
  for (auto& t : out) t.mono = t.mono * by;
  return LaurentPoly::from_canonical(std::move(out));
}

LaurentPoly pow(const LaurentPoly& p, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

RationalExpr::RationalExpr(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalExpr: zero denominator");
}

LaurentPoly coeff_extract(const LaurentPoly& p, Var v, std::int64_t k) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(v) != k) continue;
    Term stripped = t;
    stripped.mono.set_exponent(v, 0);
    out.push_back(std::move(stripped));
  }
  // every kept term had exponent k in v, so zeroing it keeps the order
  return LaurentPoly::from_canonical(std::move(out));
}

LaurentPoly substitute(const LaurentPoly& p, Var v, const RationalExpr& r,
                       std::int64_t clear_deg) {
  if (p.min_exponent(v) < 0) {
    throw std::invalid_argument(std::string("substitute: negative exponent of ") +
                                var_name(v));
  }
  const std::int64_t deg = p.degree(v);
  if (clear_deg < deg) {
    throw std::invalid_argument("substitute: clear_deg below the degree of the variable");
  }

  std::vector<LaurentPoly> num_pow{LaurentPoly(1)};
  std::vector<LaurentPoly> den_pow{LaurentPoly(1)};
  for (std::int64_t k = 1; k <= clear_deg; ++k) {
    if (k <= deg) num_pow.push_back(mul(num_pow.back(), r.num()));
    den_pow.push_back(mul(den_pow.back(), r.den()));
  }

  return kernels::sum_parallel(
      static_cast<std::size_t>(deg) + 1, [&](std::size_t k) {
        const auto ki = static_cast<std::int64_t>(k);
        LaurentPoly a_k = coeff_extract(p, v, ki);
        if (a_k.is_zero()) return LaurentPoly{};
        return mul(mul(a_k, num_pow[k]), den_pow[static_cast<std::size_t>(clear_deg - ki)]);
      });
}

UnitNormalForm normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("normalize_unit: zero polynomial");
  UnitNormalForm out;
  out.unit = {p.min_exponent(Var::L), p.min_exponent(Var::M), p.min_exponent(Var::X)};
  const Monomial inverse{-out.unit.l, -out.unit.m, -out.unit.x};
  // the least term stays least after a uniform shift
  out.sign = sgn(p.terms().front().coeff) > 0 ? 1 : -1;
  LaurentPoly shifted = shift(p, inverse);
  out.poly = out.sign > 0 ? std::move(shifted) : -shifted;
  return out;
}

namespace {

}  // namespace

std::complex<double> int_pow(std::complex<double> base, std::int64_t e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  std::complex<double> result(1.0, 0.0);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

class PowerCache {
 public:
  PowerCache(Var v, const Assignment& assign) : var_(v) {
    if (auto it = assign.find(v); it != assign.end()) {
      assigned_ = true;
      value_ = it->second;
    }
  }

  std::complex<double> get(std::int64_t e) {
    if (e == 0) return {1.0, 0.0};
    if (!assigned_) {
      throw std::invalid_argument(std::string("evaluate: variable ") + var_name(var_) +
                                  " is not assigned");
    }
    if (e < 0 && value_ == std::complex<double>(0.0, 0.0)) {
      throw std::invalid_argument(std::string("evaluate: zero assigned to ") +
                                  var_name(var_) + " which has a negative exponent");
    }
    auto [it, inserted] = cache_.try_emplace(e);
    if (inserted) it->second = int_pow(value_, e);
    return it->second;
  }

 private:
  Var var_;
  bool assigned_ = false;
  std::complex<double> value_;
  std::unordered_map<std::int64_t, std::complex<double>> cache_;
};

}  // namespace

NumericValue evaluate(const LaurentPoly& p, const Assignment& assign) {
  PowerCache lp(Var::L, assign);
  PowerCache mp(Var::M, assign);
  PowerCache xp(Var::X, assign);
  NumericValue out;
  for (const auto& t : p.terms()) {
    const std::complex<double> term =
        t.coeff.get_d() * lp.get(t.mono.l) * mp.get(t.mono.m) * xp.get(t.mono.x);
    out.value += term;
    out.magnitude += std::abs(term);
  }
  return out;
}

std::complex<double> eval_numeric(const LaurentPoly& p, const Assignment& assign) {
  return evaluate(p, assign).value;
}

std::string serialize(const LaurentPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    term["l"] = t.mono.l;
    term["m"] = t.mono.m;
    term["x"] = t.mono.x;
    term["c"] = t.coeff.get_str();
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

namespace {

std::int64_t read_exponent(const nlohmann::json& term, const char* key) {
  auto it = term.find(key);
  if (it == term.end()) throw ParseError(std::string("missing exponent \"") + key + "\"");
  if (!it->is_number_integer()) {
    throw ParseError(std::string("exponent \"") + key + "\" is not an integer");
  }
  return it->get<std::int64_t>();
}

}  // namespace

LaurentPoly parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("expected an object with a \"terms\" array");
  }
  static const std::regex kDecimal("-?(0|[1-9][0-9]*)");
  std::vector<Term> terms;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object()) throw ParseError("term is not an object");
    Monomial mono{read_exponent(term, "l"), read_exponent(term, "m"),
                  read_exponent(term, "x")};
    auto c = term.find("c");
    if (c == term.end() || !c->is_string()) {
      throw ParseError("coefficient \"c\" must be a decimal string");
    }
    const auto& text = c->get_ref<const std::string&>();
    if (!std::regex_match(text, kDecimal)) {
      throw ParseError("coefficient is not a decimal integer: " + text);
    }
    mpz_class coeff(text, 10);
    if (coeff == 0) throw ParseError("zero coefficient");
    terms.push_back({mono, std::move(coeff)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i - 1].mono == terms[i].mono) throw ParseError("duplicate monomial");
  }
  return LaurentPoly::from_canonical(std::move(terms));
}

}  // namespace knotpoly

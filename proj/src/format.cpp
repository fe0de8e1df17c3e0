#include "knotpoly/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace knotpoly {
namespace {

constexpr Var kAllVars[] = {Var::L, Var::M, Var::X};

// Emits "|c| * monomial" with factor separator sep and exponent style.
std::string term_body(const Term& t, std::string_view sep, bool braces) {
  std::vector<std::string> factors;
  mpz_class mag = abs(t.coeff);
  if (mag != 1 || t.mono.is_one()) factors.push_back(mag.get_str());
  for (Var v : kAllVars) {
    const std::int64_t e = t.mono.exponent(v);
    if (e == 0) continue;
    std::string f(1, var_name(v));
    if (e != 1) {
      f += braces ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    factors.push_back(std::move(f));
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += sep;
    out += factors[i];
  }
  return out;
}

template <typename It>
std::string join_terms(It begin, It end, std::string_view sep, bool braces) {
  if (begin == end) return "0";
  std::string out;
  for (It it = begin; it != end; ++it) {
    const bool negative = sgn(it->coeff) < 0;
    if (it == begin) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_body(*it, sep, braces);
  }
  return out;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) throw ParseError("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term(sign));
      first = false;
      skip_space();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term t{Monomial{}, mpz_class(sign)};
    bool any = false;
    while (true) {
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (any && peek() == '*') {
        ++pos_;
        skip_space();
      }
      if (at_end()) fail("dangling '*'");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= mpz_class(read_digits(), 10);
      } else if (c == 'L' || c == 'M' || c == 'x') {
        ++pos_;
        const Var v = c == 'L' ? Var::L : (c == 'M' ? Var::M : Var::X);
        std::int64_t e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = read_exponent();
        }
        t.mono.set_exponent(v, t.mono.exponent(v) + e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
    }
    if (!any) fail("empty term");
    return t;
  }

  std::int64_t read_exponent() {
    skip_space();
    char close = 0;
    if (!at_end() && (peek() == '{' || peek() == '(')) {
      close = peek() == '{' ? '}' : ')';
      ++pos_;
      skip_space();
    }
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::string digits = read_digits();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("bad exponent");
    if (close != 0) {
      skip_space();
      if (at_end() || peek() != close) fail("unbalanced exponent group");
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const LaurentPoly& p) {
  return join_terms(p.terms().begin(), p.terms().end(), "*", false);
}

std::string to_latex(const LaurentPoly& p) {
  return join_terms(p.terms().rbegin(), p.terms().rend(), " ", true);
}

LaurentPoly parse_expression(std::string_view text) {
  return ExpressionParser(text).run();
}

}  // namespace knotpoly

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "knotpoly/apoly.hpp"
#include "knotpoly/repcheck.hpp"
#include "knotpoly/rmpoly.hpp"

using namespace knotpoly;

namespace {

LaurentPoly mono(std::int64_t l, std::int64_t m, std::int64_t x, long c = 1) {
  return LaurentPoly::monomial({l, m, x}, mpz_class(c));
}

LaurentPoly printed_p2() {
  return mono(0, 4, 3, -1) + mono(0, 6, 2, -2) + mono(0, 4, 2) + mono(0, 2, 2, -2) +
         mono(0, 8, 1, -1) + mono(0, 6, 1) + mono(0, 4, 1, -2) + mono(0, 2, 1) + mono(0, 0, 1, -1) +
         mono(0, 4, 0);
}

LaurentPoly printed_pm2() {
  return mono(0, 2, 2) + mono(0, 4, 1) + mono(0, 2, 1, -1) + mono(0, 0, 1) + mono(0, 2, 0);
}

LaurentPoly printed_q() {
  return mono(0, 4, 3, -1) + mono(0, 6, 2, -2) + mono(0, 4, 2, 2) + mono(0, 2, 2, -2) +
         mono(0, 8, 1, -1) + mono(0, 6, 1, 2) + mono(0, 4, 1, -3) + mono(0, 2, 1, 2) +
         mono(0, 0, 1, -1) + mono(0, 4, 0, 2);
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Polynomials produced by criteria 1-5, reused for the round-trip check.
std::vector<LaurentPoly> produced;

Outcome recursion_equivalence() {
  Outcome o;
  for (std::int64_t n = -10; n <= 10; ++n) {
    const LaurentPoly closed = rm_closed(n).poly;
    if (closed != rm_recursive(n).poly) o.fail("n = " + std::to_string(n));
    produced.push_back(closed);
  }
  return o;
}

Outcome theorem_equivalence() {
  Outcome o;
  for (std::int64_t n = -6; n <= 6; ++n) {
    const LaurentPoly a = normalize_unit(apoly_theorem(n).poly).poly;
    const LaurentPoly b = normalize_unit(apoly_substitution(n).poly).poly;
    if (a != b) o.fail("n = " + std::to_string(n));
    produced.push_back(a);
  }
  return o;
}

Outcome printed_fixtures() {
  Outcome o;
  if (rm_closed(1).poly != printed_p2() || rm_recursive(1).poly != printed_p2()) o.fail("P_2");
  if (rm_closed(-1).poly != printed_pm2() || rm_recursive(-1).poly != printed_pm2()) o.fail("P_-2");
  if (q_poly() != printed_q()) o.fail("Q");
  const LaurentPoly base = mono(0, 2, 0) + mono(0, -2, 0) + mono(0, 0, 1) - LaurentPoly(1);
  const LaurentPoly rewrite = mono(0, 4, 0) * (mono(0, 0, 1, -1) * base * base + LaurentPoly(2));
  if (q_poly() != rewrite) o.fail("Q rewrite");
  produced.push_back(q_poly());
  return o;
}

Outcome coefficient_identities() {
  Outcome o;
  for (std::int64_t n = 0; n <= 10; ++n) {
    if (c_sum(n) != LaurentPoly(1)) o.fail("c_sum(" + std::to_string(n) + ")");
    produced.push_back(c_sum(n));
  }
  for (std::int64_t n = -10; n <= -1; ++n) {
    if (c_sum(n) != mono(0, 4, 0)) o.fail("c_sum(" + std::to_string(n) + ")");
    produced.push_back(c_sum(n));
  }
  for (std::int64_t n = 1; n <= 6; ++n) {
    if (coeff_extract(apoly_theorem(n).poly, Var::L, 0) != LaurentPoly(1)) {
      o.fail("L^0 coefficient, n = " + std::to_string(n));
    }
  }
  for (std::int64_t n = -6; n <= -1; ++n) {
    if (coeff_extract(apoly_theorem(n).poly, Var::L, -3 * n - 1) != mono(0, 4, 0)) {
      o.fail("top L coefficient, n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome polynomiality() {
  Outcome o;
  for (std::int64_t n = -6; n <= 6; ++n) {
    const LaurentPoly a = apoly_theorem(n).poly;
    const std::string tag = "n = " + std::to_string(n);
    if (a.min_exponent(Var::L) != 0 || a.min_exponent(Var::M) != 0) o.fail(tag + ": min exponent");
    if (a.min_exponent(Var::X) != 0 || a.degree(Var::X) != 0) o.fail(tag + ": x present");
    const std::int64_t want = n >= 0 ? 3 * n : -3 * n - 1;
    if (a.degree(Var::L) != want) o.fail(tag + ": deg_L");
    produced.push_back(a);
  }
  return o;
}

Outcome representation_check() {
  Outcome o;
  constexpr double kTol = 1e-8;
  GridOptions opt;
  opt.ns = {-4, -3, -2, -1, 1, 2, 3, 4};
  opt.samples = 20;
  opt.seed = 20240601;
  opt.tol = kTol;
  const auto cells = verify_grid_parallel(opt);
  double worst = 0.0;
  double weakest_control = 1e300;
  std::size_t points = 0;
  for (const auto& cell : cells) {
    if (!cell.error.empty()) o.fail("n = " + std::to_string(cell.n) + ": " + cell.error);
    for (const auto& r : cell.reports) {
      ++points;
      worst = std::max({worst, r.relation_residual, r.longitude_mismatch, r.longitude_offdiag,
                        r.apoly_residual});
      if (!r.passed) o.fail("n = " + std::to_string(cell.n) + " residual above tolerance");
      const VerificationReport bad = verify_point(cell.n, cell.m_sample, r.root + 0.1, kTol);
      weakest_control = std::min(weakest_control, bad.relation_residual);
      if (!(bad.relation_residual > 1e-3)) o.fail("negative control not separated");
    }
  }
  std::ostringstream os;
  os << points << " points, worst residual " << worst << ", smallest control residual "
     << weakest_control;
  if (o.ok) o.detail = os.str();
  else o.detail += "; " + os.str();
  return o;
}

std::string capture(const std::string& args, int& status) {
  const std::string cmd = std::string(APOLY_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome serialization() {
  Outcome o;
  for (const auto& p : produced) {
    if (parse(serialize(p)) != p) o.fail("round trip of " + serialize(p).substr(0, 60));
  }
  for (const char* args : {"compute --n -6..6 --format json", "rm --n -10..10 --format json",
                           "verify --n -4..4 --samples 20 --seed 20240601", "newton --n -6..6"}) {
    int s1 = 0, s2 = 0, s3 = 0;
    const std::string a = capture(args, s1);
    const std::string b = capture(args, s2);
    const std::string c = capture(std::string("--threads 1 ") + args, s3);
    if (s1 != 0 || s2 != 0 || s3 != 0) o.fail(std::string("nonzero exit: ") + args);
    if (a.empty() || a != b || a != c) o.fail(std::string("output differs: ") + args);
  }
  if (o.ok) o.detail = std::to_string(produced.size()) + " polynomials, 4 CLI invocations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed form equals recursion, n in [-10,10]", recursion_equivalence},
      {2, "summed A-polynomial equals substitution, n in [-6,6]", theorem_equivalence},
      {3, "printed P_2, P_-2, Q and the Q rewrite", printed_fixtures},
      {4, "coefficient identities", coefficient_identities},
      {5, "polynomiality and L-degree", polynomiality},
      {6, "representation check at tol 1e-8 with negative control", representation_check},
      {7, "serialization round trip and CLI determinism", serialization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("AC%d %s: %s (%.2fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

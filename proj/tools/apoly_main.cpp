// apoly: compute, cross-check and verify A-polynomials of the knots C(2n, 3).
//
// Exit status: 0 success, 1 a mathematical check failed, 2 usage error.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotpoly/apoly.hpp"
#include "knotpoly/format.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/repcheck.hpp"
#include "knotpoly/rmpoly.hpp"

namespace {

using knotpoly::LaurentPoly;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  bool single() const { return lo == hi; }
};

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return value;
}

NRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t n = parse_int(text);
    return {n, n};
  }
  NRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("range bounds out of order: " + text);
  return r;
}

struct Config {
  std::string n_text = "1";
  std::string path;
  std::string format = "text";
  std::size_t samples = 20;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string apoly_json;
  bool serial = false;
  int threads = 0;
};

std::string render(const LaurentPoly& p, const std::string& format) {
  if (format == "json") return knotpoly::serialize(p);
  if (format == "latex") return knotpoly::to_latex(p);
  return knotpoly::to_text(p);
}

ojson as_json(const LaurentPoly& p) { return ojson::parse(knotpoly::serialize(p)); }

// Shared driver for compute and rm: both produce one polynomial per path.
template <typename First, typename Second>
int emit_two_paths(const NRange& range, const Config& cfg, const std::string& name_a,
                   const std::string& name_b, First path_a, Second path_b) {
  const bool want_a = cfg.path == name_a || cfg.path == "both";
  const bool want_b = cfg.path == name_b || cfg.path == "both";
  const bool both = want_a && want_b;
  int status = kExitOk;
  for (const std::int64_t n : range.values()) {
    LaurentPoly a;
    LaurentPoly b;
    if (want_a) a = path_a(n);
    if (want_b) b = path_b(n);
    const bool agree = !both || a == b;
    if (!agree) status = kExitCheckFailed;

    if (cfg.format == "json") {
      if (!both && range.single()) {
        std::cout << knotpoly::serialize(want_a ? a : b) << '\n';
        continue;
      }
      ojson rec;
      rec["n"] = n;
      if (want_a) rec[name_a] = as_json(a);
      if (want_b) rec[name_b] = as_json(b);
      if (both) rec["paths_agree"] = agree;
      std::cout << rec.dump() << '\n';
    } else {
      const std::string prefix = range.single() ? "" : "n=" + std::to_string(n) + " ";
      if (!both) {
        std::cout << prefix << render(want_a ? a : b, cfg.format) << '\n';
        continue;
      }
      std::cout << prefix << name_a << ": " << render(a, cfg.format) << '\n';
      std::cout << prefix << name_b << ": " << render(b, cfg.format) << '\n';
      std::cout << prefix << "paths_agree: " << (agree ? "true" : "false") << '\n';
    }
  }
  return status;
}

int cmd_compute(const Config& cfg) {
  const NRange range = parse_range(cfg.n_text);
  return emit_two_paths(
      range, cfg, "theorem", "substitution",
      [](std::int64_t n) { return knotpoly::apoly_theorem(n).poly; },
      [](std::int64_t n) { return knotpoly::apoly_substitution(n).poly; });
}

int cmd_rm(const Config& cfg) {
  const NRange range = parse_range(cfg.n_text);
  return emit_two_paths(
      range, cfg, "closed", "recursive",
      [](std::int64_t n) { return knotpoly::rm_closed(n).poly; },
      [](std::int64_t n) { return knotpoly::rm_recursive(n).poly; });
}

int cmd_verify(const Config& cfg) {
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  const NRange range = parse_range(cfg.n_text);

  LaurentPoly supplied;
  knotpoly::GridOptions options;
  options.ns = range.values();
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.tol = cfg.tol;
  if (!cfg.apoly_json.empty()) {
    std::ifstream in(cfg.apoly_json);
    if (!in) throw UsageError("cannot open " + cfg.apoly_json);
    std::stringstream buffer;
    buffer << in.rdbuf();
    supplied = knotpoly::parse(buffer.str());
    options.apoly_override = &supplied;
  }

  const auto cells = cfg.serial ? knotpoly::verify_grid_serial(options)
                                : knotpoly::verify_grid_parallel(options);
  std::cout << knotpoly::grid_to_json(options, cells) << '\n';
  for (const auto& cell : cells) {
    if (!cell.passed()) return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_newton(const Config& cfg) {
  const NRange range = parse_range(cfg.n_text);
  for (const std::int64_t n : range.values()) {
    const auto polygon = knotpoly::newton_polygon(knotpoly::apoly_theorem(n));
    if (range.single()) {
      std::cout << knotpoly::newton_to_json(polygon) << '\n';
    } else {
      ojson rec;
      rec["n"] = n;
      rec["polygon"] = ojson::parse(knotpoly::newton_to_json(polygon));
      std::cout << rec.dump() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A-polynomials of the two-bridge knots C(2n,3)"};
  app.require_subcommand(1);
  Config cfg;

  auto add_n = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n_text, "n, or an inclusive range a..b")->required();
  };
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text | latex | json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "A_{2n}(L, M)");
  add_n(compute);
  add_format(compute);
  compute->add_option("--path", cfg.path, "theorem | substitution | both")
      ->check(CLI::IsMember({"theorem", "substitution", "both"}));

  auto* rm = app.add_subcommand("rm", "Riley-Mednykh polynomial P_{2n}(x, M)");
  add_n(rm);
  add_format(rm);
  rm->add_option("--path", cfg.path, "closed | recursive | both")
      ->check(CLI::IsMember({"closed", "recursive", "both"}));

  auto* verify = app.add_subcommand("verify", "numeric check against the SL(2,C) representation");
  add_n(verify);
  verify->add_option("--samples", cfg.samples, "unit-circle M samples per n")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "sampler seed");
  verify->add_option("--apoly-json", cfg.apoly_json,
                     "check this canonical-JSON polynomial instead of the computed one");
  verify->add_flag("--serial", cfg.serial, "use the serial reference grid");

  auto* newton = app.add_subcommand("newton", "Newton polygon of A_{2n}");
  add_n(newton);

  app.add_option("--threads", cfg.threads, "OpenMP threads (default: runtime choice)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    if (compute->parsed()) {
      if (cfg.path.empty()) cfg.path = "theorem";
      return cmd_compute(cfg);
    }
    if (rm->parsed()) {
      if (cfg.path.empty()) cfg.path = "closed";
      return cmd_rm(cfg);
    }
    if (verify->parsed()) return cmd_verify(cfg);
    if (newton->parsed()) return cmd_newton(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knotpoly::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

#include "knotpoly/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace knotpoly::kernels {

LaurentPoly mul_reference(const LaurentPoly& p, const LaurentPoly& q) {
  std::map<Monomial, mpz_class> acc;
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) out.push_back({mono, std::move(coeff)});
  }
  return LaurentPoly::from_canonical(std::move(out));
}

namespace {

std::vector<Term> merge_sorted(std::vector<Term> a, std::vector<Term> b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono < b[j].mono) {
      out.push_back(std::move(a[i++]));
    } else if (b[j].mono < a[i].mono) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coeff += b[j].coeff;
      if (a[i].coeff != 0) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

// Pairwise tree reduction keeps the merge cost at O(total log parts).
std::vector<Term> merge_all(std::vector<std::vector<Term>> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      next.push_back(merge_sorted(std::move(parts[i]), std::move(parts[i + 1])));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

}  // namespace

LaurentPoly mul_parallel(const LaurentPoly& p, const LaurentPoly& q) {
  const auto& lhs = p.size() >= q.size() ? p.terms() : q.terms();
  const auto& rhs = p.size() >= q.size() ? q.terms() : p.terms();
  const int threads = omp_in_parallel() ? 1 : omp_get_max_threads();
  std::vector<std::vector<Term>> partials(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(rhs.size() * 4);
    mpz_class prod;
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      for (const auto& b : rhs) {
        mpz_mul(prod.get_mpz_t(), lhs[i].coeff.get_mpz_t(), b.coeff.get_mpz_t());
        acc[lhs[i].mono * b.mono] += prod;
      }
    }
    std::vector<Term> local;
    local.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
      if (coeff != 0) local.push_back({mono, std::move(coeff)});
    }
    std::sort(local.begin(), local.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    partials[static_cast<std::size_t>(tid)] = std::move(local);
  }

  return LaurentPoly::from_canonical(merge_all(std::move(partials)));
}

LaurentPoly sum_reference(std::size_t count, const TermGenerator& generate) {
  LaurentPoly total;
  for (std::size_t i = 0; i < count; ++i) total += generate(i);
  return total;
}

LaurentPoly sum_parallel(std::size_t count, const TermGenerator& generate) {
  std::vector<LaurentPoly> summands(count);
#pragma omp parallel for schedule(dynamic, 1) if (count > 1 && !omp_in_parallel())
  for (std::size_t i = 0; i < count; ++i) summands[i] = generate(i);

  while (summands.size() > 1) {
    std::vector<LaurentPoly> next((summands.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = std::move(summands[2 * i]);
      if (2 * i + 1 < summands.size()) next[i] += summands[2 * i + 1];
    }
    summands = std::move(next);
  }
  return summands.empty() ? LaurentPoly{} : std::move(summands.front());
}

}  // namespace knotpoly::kernels

#pragma once

#include <cstddef>
#include <functional>

#include "knotpoly/laurent.hpp"

// Hot loops of the library. Each parallel kernel has a serial reference
// next to it; the tests hold the two to exact equality and bench_kernels
// times them against each other.
namespace knotpoly::kernels {

/// Schoolbook product accumulated into one ordered map.
LaurentPoly mul_reference(const LaurentPoly& p, const LaurentPoly& q);

/// Rows of p are split across OpenMP threads; each thread accumulates its
/// partial product in a private hash table, then the sorted partials are
/// merged.
LaurentPoly mul_parallel(const LaurentPoly& p, const LaurentPoly& q);

/// Below this many coefficient products mul() stays on the serial path.
inline constexpr std::size_t kParallelMulThreshold = 4096;

using TermGenerator = std::function<LaurentPoly(std::size_t)>;

/// sum_{i < count} generate(i), in index order.
LaurentPoly sum_reference(std::size_t count, const TermGenerator& generate);

/// Same sum with the summands built concurrently. generate must be safe to
/// call from several threads at once. The reduction is exact, so the result
/// is bit-identical to sum_reference.
LaurentPoly sum_parallel(std::size_t count, const TermGenerator& generate);

}  // namespace knotpoly::kernels

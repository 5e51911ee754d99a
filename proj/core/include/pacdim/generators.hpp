#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pacdim/classes.hpp"
#include "pacdim/rational.hpp"

namespace pacdim {

/// Enumeration guard shared by the generators: families larger than `cap`
/// are materialized only as a seeded pseudorandom subfamily of `cap`
/// members; without a seed the generator refuses (guard_error).
struct GeneratorGuard {
  std::size_t cap = 50000;
  std::optional<std::uint64_t> subsample_seed;
};

struct GuardInfo {
  bool subsampled = false;
  std::string full_size;     // exact member count of the full family
  std::size_t emitted = 0;
};

/// All sets of size <= m and all their complements (so Omega and the empty
/// set included), deduplicated, ordered by (size, lex). Requires 0 < m < N/2.
ConceptClass gen_finite_cofinite(int n_points, int max_size, const GeneratorGuard& guard = {},
                                 GuardInfo* info = nullptr);

/// Nested segments I_y = {x : x < y} for y = 0..N.
ConceptClass gen_initial_segments(int n_points);

/// Cell-union concepts over a grid of [0,1) with per-concept rational codes:
/// f_C is code(C) off C and 1-code(C) on C, so min(v, 1-v) recovers the code
/// from any single value.
struct IntervalCodeClass {
  int order = 0;  // cells have width 1/order
  int grid = 0;   // domain is {j/grid : j < grid}
  FunctionClass functions;
  std::vector<DomainSet> concepts;  // coded cell unions, same indexing
  std::vector<Rational> codes;      // distinct rationals in [0,1/3], ascending
};

/// Concepts are unions of at most cbrt(order) cells of width 1/order.
/// Requires order >= 8 and grid divisible by order.
IntervalCodeClass gen_interval_code(int order, int grid, const GeneratorGuard& guard = {},
                                    GuardInfo* info = nullptr);

}  // namespace pacdim

#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "pacdim/measure.hpp"

namespace pacdim {

/// Identifier echoed in reports. Draws are mt19937_64 words fed through an
/// exact inverse-CDF over the rational cumulative weights; worker streams are
/// derived from (seed, stream), so results never depend on thread count.
inline constexpr std::string_view kRngAlgorithmId = "mt19937_64/seedseq(seed,stream)/invcdf64";

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Prepared inverse-CDF sampler for one measure.
class Sampler {
 public:
  explicit Sampler(const DiscreteMeasure& mu);

  int draw(RngStream& rng) const;
  std::vector<int> sample_n(RngStream& rng, int n) const;

 private:
  // bounds_[i] is the largest 64-bit word mapped to point i.
  std::vector<std::uint64_t> bounds_;
};

/// Deterministic i.i.d. sample of size n >= 0 (stream 0 of the seed).
std::vector<int> sample_iid(const DiscreteMeasure& mu, int n, std::uint64_t seed);

}  // namespace pacdim

#include "pacdim/sampling.hpp"

#include <algorithm>

namespace pacdim {

Sampler::Sampler(const DiscreteMeasure& mu) {
  const auto& weights = mu.weights();
  bounds_.reserve(weights.size());
  Rational cumulative = 0;
  BigInt two64 = BigInt(1) << 64;
  for (const auto& w : weights) {
    cumulative += w;
    // largest r with r < cumulative * 2^64, i.e. ceil(cumulative * 2^64) - 1
    BigInt num = numerator(cumulative) * two64;
    BigInt den = denominator(cumulative);
    BigInt bound = (num + den - 1) / den - 1;
    bounds_.push_back(bound.convert_to<std::uint64_t>());
  }
}

int Sampler::draw(RngStream& rng) const {
  std::uint64_t r = rng.next();
  auto it = std::lower_bound(bounds_.begin(), bounds_.end(), r);
  return static_cast<int>(it - bounds_.begin());
}

std::vector<int> Sampler::sample_n(RngStream& rng, int n) const {
  if (n < 0) throw validation_error("sample size must be >= 0");
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(draw(rng));
  return out;
}

std::vector<int> sample_iid(const DiscreteMeasure& mu, int n, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return Sampler(mu).sample_n(rng, n);
}

}  // namespace pacdim

#include "pacdim/bounds.hpp"

#include <cmath>

#include "pacdim/errors.hpp"

namespace pacdim {

namespace {

long double as_ld(const Rational& value) { return value.convert_to<long double>(); }

long long ceil_to_ll(long double value) {
  return static_cast<long long>(std::ceil(value));
}

}  // namespace

void BoundParams::validate() const {
  if (epsilon <= 0 || epsilon >= 1) throw validation_error("epsilon must lie in (0,1)");
  if (delta <= 0 || delta >= 1) throw validation_error("delta must lie in (0,1)");
  if (big_c <= 0) throw validation_error("big_c must be positive");
}

long long vc_sample_bound(const BoundParams& p) {
  p.validate();
  if (p.d < 1) throw validation_error("vc_sample_bound needs d >= 1");
  const long double eps = as_ld(p.epsilon);
  const long double delta = as_ld(p.delta);
  const long double e = std::exp(1.0L);
  const long double inner = (2 * e * e / eps) * std::log(2 * e / eps);
  const long double value =
      (128.0L / (eps * eps)) * (p.d * std::log(inner) + std::log(8.0L / delta));
  return ceil_to_ll(value);
}

FatDimensionProfile::FatDimensionProfile(std::map<Rational, int> table)
    : table_(std::move(table)) {
  for (const auto& [scale, dim] : table_) {
    if (scale <= 0) throw validation_error("profile scales must be positive");
    if (dim < 0) throw validation_error("profile dimensions must be >= 0");
  }
  // non-increasing in the scale
  const Rational* prev_scale = nullptr;
  int prev_dim = 0;
  for (const auto& [scale, dim] : table_) {
    if (prev_scale && dim > prev_dim)
      throw validation_error("profile must be non-increasing in the scale");
    prev_scale = &scale;
    prev_dim = dim;
  }
}

int FatDimensionProfile::dimension_at(const Rational& scale) const {
  auto it = table_.find(scale);
  if (it == table_.end())
    throw validation_error("no profile entry at scale " + format_rational(scale) +
                           " (profiles are never interpolated)");
  return it->second;
}

long long fat_sample_bound(const BoundParams& p, const FatDimensionProfile& profile) {
  p.validate();
  const Rational scale = p.epsilon / 24;
  const int d = profile.dimension_at(scale);
  if (d < 1) throw validation_error("fat_sample_bound needs d(eps/24) >= 1");
  const long double eps = as_ld(p.epsilon);
  const long double delta = as_ld(p.delta);
  const long double big_c = as_ld(p.big_c);
  const long double lg = std::log(d / eps);
  const long double value = big_c * ((1.0L / (eps * eps)) * d * lg * lg + std::log(1.0L / delta));
  return ceil_to_ll(value);
}

PackingLowerBound packing_lower_bound(int d, const Rational& eps) {
  if (d < 1) throw validation_error("packing_lower_bound needs d >= 1");
  if (eps <= 0 || eps >= Rational(1, 4))
    throw validation_error("packing_lower_bound needs 0 < eps < 1/4");
  const Rational threshold = 2 * eps * d;
  BigInt k_max = numerator(threshold) / denominator(threshold);  // floor, inclusive
  BigInt denom_sum = 0;
  for (BigInt k = 0; k <= k_max && k <= d; ++k)
    denom_sum += binomial(d, k.convert_to<int>());
  PackingLowerBound out;
  out.combinatorial = Rational(BigInt(1) << d, denom_sum);
  const long double t = 0.5L - 2 * eps.convert_to<long double>();
  out.exponential = static_cast<double>(std::exp(2 * t * t * d));
  return out;
}

}  // namespace pacdim

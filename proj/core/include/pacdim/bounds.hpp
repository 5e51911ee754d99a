#pragma once

#include <map>

#include "pacdim/rational.hpp"

namespace pacdim {

/// Inputs of the closed-form sample-size calculators. `big_c` is the
/// unextracted universal constant of the fat-shattering bound; it defaults
/// to 1 and is always echoed in reports.
struct BoundParams {
  Rational epsilon;
  Rational delta;
  int d = 0;
  Rational big_c = 1;

  void validate() const;
};

/// ceil( (128/eps^2) * (d*ln((2e^2/eps)*ln(2e/eps)) + ln(8/delta)) ),
/// natural logarithms. Rejects d = 0 (degenerate).
long long vc_sample_bound(const BoundParams& p);

/// Fat-shattering dimension as a function of the scale, on explicit scales
/// only; missing entries are an error (no interpolation).
class FatDimensionProfile {
 public:
  FatDimensionProfile() = default;
  explicit FatDimensionProfile(std::map<Rational, int> table);

  int dimension_at(const Rational& scale) const;
  const std::map<Rational, int>& table() const { return table_; }

 private:
  std::map<Rational, int> table_;
};

/// ceil( C * ((1/eps^2) * d(eps/24) * ln^2(d(eps/24)/eps) + ln(1/delta)) ).
long long fat_sample_bound(const BoundParams& p, const FatDimensionProfile& profile);

struct PackingLowerBound {
  Rational combinatorial;  // 2^d / sum_{k <= 2 eps d} C(d, k), exact
  double exponential;      // exp(2 (1/2 - 2 eps)^2 d)
};

/// Both lower bounds on the number of pairwise 2eps-separated concepts
/// carved from d shattered clusters. Requires 0 < eps < 1/4.
PackingLowerBound packing_lower_bound(int d, const Rational& eps);

}  // namespace pacdim

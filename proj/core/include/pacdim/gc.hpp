#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pacdim/classes.hpp"
#include "pacdim/measure.hpp"

namespace pacdim {

/// Per-trial sup deviations between true and empirical means over a class.
struct GCReport {
  long long n = 0;
  int trials = 0;
  int exceed_count = 0;
  double deviation_exceed_rate = 0.0;
  std::vector<Rational> deviations;  // exact, one per trial
  double dev_min = 0, dev_q25 = 0, dev_median = 0, dev_q75 = 0, dev_max = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
};

/// Monte Carlo estimate of the uniform-deviation tail: draws `trials`
/// i.i.d. n-samples, computes sup over the class of |mu(C) - mu_n(C)|
/// exactly, and reports the fraction exceeding eps. Trial t uses rng stream
/// t, so results are independent of the thread count.
GCReport ucem_simulate(const ConceptClass& c, const DiscreteMeasure& mu, long long n,
                       int trials, const Rational& eps, std::uint64_t seed, int threads = 1);

/// Function-class variant with sup |E_mu f - E_{mu_n} f|.
GCReport ucem_simulate(const FunctionClass& f, const DiscreteMeasure& mu, long long n,
                       int trials, const Rational& eps, std::uint64_t seed, int threads = 1);

}  // namespace pacdim

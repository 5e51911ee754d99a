#include "pacdim/gc.hpp"

#include <algorithm>

#include "pacdim/sampling.hpp"
#include "trial_runner.hpp"

namespace pacdim {

namespace {

void summarize(GCReport& report, const Rational& eps) {
  report.exceed_count = 0;
  for (const auto& dev : report.deviations)
    if (dev > eps) ++report.exceed_count;
  report.deviation_exceed_rate =
      report.trials ? static_cast<double>(report.exceed_count) / report.trials : 0.0;
  std::vector<Rational> sorted = report.deviations;
  std::sort(sorted.begin(), sorted.end());
  auto at = [&](double q) {
    std::size_t idx = static_cast<std::size_t>(q * (sorted.size() - 1));
    return to_double(sorted[idx]);
  };
  if (!sorted.empty()) {
    report.dev_min = at(0.0);
    report.dev_q25 = at(0.25);
    report.dev_median = at(0.5);
    report.dev_q75 = at(0.75);
    report.dev_max = at(1.0);
  }
}

std::vector<long long> draw_counts(const Sampler& sampler, std::uint64_t seed, int trial,
                                   long long n, int domain_size) {
  RngStream rng(seed, static_cast<std::uint64_t>(trial));
  std::vector<long long> counts(domain_size, 0);
  for (long long i = 0; i < n; ++i) ++counts[sampler.draw(rng)];
  return counts;
}

}  // namespace

GCReport ucem_simulate(const ConceptClass& c, const DiscreteMeasure& mu, long long n,
                       int trials, const Rational& eps, std::uint64_t seed, int threads) {
  c.validate();
  if (mu.domain() != c.domain) throw validation_error("measure domain mismatch");
  if (trials < 1) throw validation_error("trials must be >= 1");
  if (n < 1) throw validation_error("sample size must be >= 1");

  std::vector<Rational> true_mass;
  true_mass.reserve(c.size());
  for (const auto& set : c.concepts) true_mass.push_back(mu.mass(set));

  Sampler sampler(mu);
  GCReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.rng_algorithm = std::string(kRngAlgorithmId);
  report.deviations.assign(trials, Rational(0));

  detail::run_trials(trials, threads, [&](int t) {
    auto counts = draw_counts(sampler, seed, t, n, c.domain.size);
    Rational sup(0);
    for (int j = 0; j < c.size(); ++j) {
      long long hits = 0;
      const auto& set = c.concepts[j];
      for (int p = set.find_first(); p >= 0; p = set.find_next(p)) hits += counts[p];
      Rational dev = Rational(hits, n) - true_mass[j];
      if (dev < 0) dev = -dev;
      if (dev > sup) sup = dev;
    }
    report.deviations[t] = std::move(sup);
  });

  summarize(report, eps);
  return report;
}

GCReport ucem_simulate(const FunctionClass& f, const DiscreteMeasure& mu, long long n,
                       int trials, const Rational& eps, std::uint64_t seed, int threads) {
  f.validate();
  if (mu.domain() != f.domain) throw validation_error("measure domain mismatch");
  if (trials < 1) throw validation_error("trials must be >= 1");
  if (n < 1) throw validation_error("sample size must be >= 1");

  std::vector<Rational> true_mean;
  true_mean.reserve(f.size());
  for (const auto& table : f.functions) true_mean.push_back(mu.expectation(table));

  Sampler sampler(mu);
  GCReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.rng_algorithm = std::string(kRngAlgorithmId);
  report.deviations.assign(trials, Rational(0));

  detail::run_trials(trials, threads, [&](int t) {
    auto counts = draw_counts(sampler, seed, t, n, f.domain.size);
    Rational sup(0);
    for (int j = 0; j < f.size(); ++j) {
      Rational empirical(0);
      for (int p = 0; p < f.domain.size; ++p)
        if (counts[p]) empirical += Rational(counts[p]) * f.functions[j][p];
      Rational dev = empirical / n - true_mean[j];
      if (dev < 0) dev = -dev;
      if (dev > sup) sup = dev;
    }
    report.deviations[t] = std::move(sup);
  });

  summarize(report, eps);
  return report;
}

}  // namespace pacdim

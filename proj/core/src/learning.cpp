#include "pacdim/learning.hpp"

#include <algorithm>

#include "pacdim/sampling.hpp"
#include "trial_runner.hpp"

namespace pacdim {

std::string_view order_preset_name(OrderPreset preset) {
  switch (preset) {
    case OrderPreset::kDudleyDurst: return "dudley-durst";
    case OrderPreset::kBehwFixed: return "behw-fixed";
  }
  return "?";
}

std::optional<OrderPreset> order_preset_from_name(std::string_view name) {
  if (name == "dudley-durst") return OrderPreset::kDudleyDurst;
  if (name == "behw-fixed") return OrderPreset::kBehwFixed;
  return std::nullopt;
}

namespace {

void validate_order(std::size_t size, const std::vector<int>& order) {
  if (order.size() != size) throw validation_error("order must be a permutation of the class");
  std::vector<bool> seen(size, false);
  for (int idx : order) {
    if (idx < 0 || idx >= static_cast<int>(size) || seen[idx])
      throw validation_error("order must be a permutation of the class");
    seen[idx] = true;
  }
}

std::vector<int> identity_order(std::size_t size) {
  std::vector<int> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = static_cast<int>(i);
  return order;
}

/// Moves the given indices (when found) to the front, keeping the rest
/// stable.
std::vector<int> front_order(std::size_t size, const std::vector<int>& front) {
  std::vector<int> order;
  std::vector<bool> taken(size, false);
  for (int idx : front)
    if (idx >= 0) {
      order.push_back(idx);
      taken[idx] = true;
    }
  for (std::size_t i = 0; i < size; ++i)
    if (!taken[i]) order.push_back(static_cast<int>(i));
  return order;
}

}  // namespace

void OrderedClass::validate() const {
  cls.validate();
  validate_order(cls.concepts.size(), order);
}

void OrderedFunctionClass::validate() const {
  cls.validate();
  validate_order(cls.functions.size(), order);
}

OrderedClass with_preset_order(ConceptClass cls, OrderPreset preset) {
  cls.validate();
  OrderedClass out;
  if (preset == OrderPreset::kDudleyDurst) {
    out.order = identity_order(cls.concepts.size());
  } else {
    int empty_idx = -1, full_idx = -1;
    for (int i = 0; i < cls.size(); ++i) {
      if (empty_idx < 0 && cls.concepts[i].empty()) empty_idx = i;
      if (full_idx < 0 && cls.concepts[i].count() == cls.domain.size) full_idx = i;
    }
    out.order = front_order(cls.concepts.size(), {empty_idx, full_idx});
  }
  out.cls = std::move(cls);
  return out;
}

OrderedFunctionClass with_preset_order(FunctionClass cls, OrderPreset preset) {
  cls.validate();
  OrderedFunctionClass out;
  if (preset == OrderPreset::kDudleyDurst) {
    out.order = identity_order(cls.functions.size());
  } else {
    int zero_idx = -1, one_idx = -1;
    for (int i = 0; i < cls.size(); ++i) {
      bool all_zero = true, all_one = true;
      for (const auto& v : cls.functions[i]) {
        all_zero = all_zero && v == 0;
        all_one = all_one && v == 1;
      }
      if (zero_idx < 0 && all_zero) zero_idx = i;
      if (one_idx < 0 && all_one) one_idx = i;
    }
    out.order = front_order(cls.functions.size(), {zero_idx, one_idx});
  }
  out.cls = std::move(cls);
  return out;
}

int first_consistent(const OrderedClass& rule, const LabeledSample& sample) {
  rule.validate();
  sample.validate(rule.cls.domain, /*binary_labels=*/true);
  for (int idx : rule.order) {
    const DomainSet& concept_set = rule.cls.concepts[idx];
    bool ok = true;
    for (std::size_t i = 0; i < sample.points.size() && ok; ++i)
      ok = concept_set.test(sample.points[i]) == (sample.labels[i] == 1);
    if (ok) return idx;
  }
  throw validation_error("inconsistent sample: no class member matches the labels");
}

int first_consistent(const OrderedFunctionClass& rule, const LabeledSample& sample) {
  rule.validate();
  sample.validate(rule.cls.domain, /*binary_labels=*/false);
  for (int idx : rule.order) {
    const auto& table = rule.cls.functions[idx];
    bool ok = true;
    for (std::size_t i = 0; i < sample.points.size() && ok; ++i)
      ok = table[sample.points[i]] == sample.labels[i];
    if (ok) return idx;
  }
  throw validation_error("inconsistent sample: no class member matches the labels");
}

int min_containing_segment(const OrderedClass& rule, const LabeledSample& sample) {
  rule.validate();
  sample.validate(rule.cls.domain, /*binary_labels=*/true);
  for (std::size_t k = 0; k + 1 < rule.order.size(); ++k)
    if (!rule.cls.concepts[rule.order[k]].is_subset_of(rule.cls.concepts[rule.order[k + 1]]))
      throw validation_error("min_containing_segment needs a nested class");
  DomainSet positives(rule.cls.domain);
  for (std::size_t i = 0; i < sample.points.size(); ++i)
    if (sample.labels[i] == 1) positives.set(sample.points[i]);
  for (int idx : rule.order)
    if (positives.is_subset_of(rule.cls.concepts[idx])) return idx;
  throw validation_error("positive labels are not contained in any segment");
}

DomainSet FiniteCofiniteFamily::first_consistent(const LabeledSample& sample) const {
  Domain dom(n_points);
  if (max_size < 1 || 2 * max_size >= n_points)
    throw validation_error("finite/cofinite family needs 0 < m < N/2");
  sample.validate(dom, /*binary_labels=*/true);
  DomainSet pos(dom), neg(dom);
  for (std::size_t i = 0; i < sample.points.size(); ++i)
    (sample.labels[i] == 1 ? pos : neg).set(sample.points[i]);
  if (pos.intersects(neg))
    throw validation_error("inconsistent sample: contradictory labels");

  // the (size, lex)-first consistent member of each block of the order
  auto small_hypothesis = [&]() -> std::optional<DomainSet> {
    if (pos.count() <= max_size) return pos;
    return std::nullopt;
  };
  auto cofinite_hypothesis = [&]() -> std::optional<DomainSet> {
    DomainSet free = (pos | neg).complement();
    int excluded = std::min(max_size, neg.count() + free.count());
    if (neg.count() > max_size || excluded < 1) return std::nullopt;
    DomainSet drop = neg;
    int extra = excluded - neg.count();
    for (int p = n_points - 1; p >= 0 && extra > 0; --p)
      if (free.test(p)) {
        drop.set(p);
        --extra;
      }
    return drop.complement();
  };

  if (order == OrderPreset::kBehwFixed) {
    if (pos.empty()) return DomainSet(dom);
    if (neg.empty()) return DomainSet::full(dom);
  }
  if (auto s = small_hypothesis()) return *s;
  if (auto c = cofinite_hypothesis()) return *c;
  if (neg.empty()) return DomainSet::full(dom);
  throw validation_error("inconsistent sample: no family member matches the labels");
}

ExactCodeRule ExactCodeRule::from_codes(const std::vector<Rational>& codes) {
  ExactCodeRule rule;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (!rule.code_to_index.emplace(codes[i], static_cast<int>(i)).second)
      throw validation_error("codes must be distinct");
  return rule;
}

int ExactCodeRule::decode(const LabeledSample& sample) const {
  if (sample.points.empty()) throw validation_error("decoder needs at least one labeled point");
  const Rational& r = sample.labels.front();
  Rational code = r <= 1 - r ? r : 1 - r;
  auto it = code_to_index.find(code);
  if (it == code_to_index.end())
    throw validation_error("no function carries code " + format_rational(code));
  return it->second;
}

namespace {

void summarize_errors(PACEvalReport& report, const Rational& eps) {
  report.exceed_count = 0;
  for (const auto& err : report.errors)
    if (err > eps) ++report.exceed_count;
  report.exceed_rate =
      report.trials ? static_cast<double>(report.exceed_count) / report.trials : 0.0;
  std::vector<Rational> sorted = report.errors;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty()) {
    report.err_min = to_double(sorted.front());
    report.err_median = to_double(sorted[(sorted.size() - 1) / 2]);
    report.err_max = to_double(sorted.back());
  }
}

}  // namespace

PACEvalReport evaluate_pac(const ConceptRule& rule, const DomainSet& target,
                           const DiscreteMeasure& mu, int n, int trials, const Rational& eps,
                           std::uint64_t seed, int threads) {
  if (trials < 1) throw validation_error("trials must be >= 1");
  if (n < 0) throw validation_error("sample size must be >= 0");
  if (target.domain() != mu.domain()) throw validation_error("target domain mismatch");

  Sampler sampler(mu);
  PACEvalReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.rng_algorithm = std::string(kRngAlgorithmId);
  report.errors.assign(trials, Rational(0));
  std::vector<char> rule_errors(trials, 0);

  detail::run_trials(trials, threads, [&](int t) {
    RngStream rng(seed, static_cast<std::uint64_t>(t));
    auto points = sampler.sample_n(rng, n);
    auto sample = label_by_concept(points, target);
    try {
      DomainSet hypothesis = rule(sample);
      report.errors[t] = symdiff_distance(mu, hypothesis, target);
    } catch (const validation_error&) {
      report.errors[t] = 1;
      rule_errors[t] = 1;
    }
  });

  for (char flagged : rule_errors) report.rule_error_count += flagged;
  summarize_errors(report, eps);
  return report;
}

PACEvalReport evaluate_pac(const FunctionClass& cls, const FunctionRule& rule, int target_index,
                           const DiscreteMeasure& mu, int n, int trials, const Rational& eps,
                           std::uint64_t seed, int threads) {
  cls.validate();
  if (trials < 1) throw validation_error("trials must be >= 1");
  if (n < 0) throw validation_error("sample size must be >= 0");
  if (cls.domain != mu.domain()) throw validation_error("class domain mismatch");
  if (target_index < 0 || target_index >= cls.size())
    throw validation_error("target index outside the class");

  Sampler sampler(mu);
  PACEvalReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.rng_algorithm = std::string(kRngAlgorithmId);
  report.errors.assign(trials, Rational(0));
  std::vector<char> rule_errors(trials, 0);
  const auto& target_table = cls.functions[target_index];

  detail::run_trials(trials, threads, [&](int t) {
    RngStream rng(seed, static_cast<std::uint64_t>(t));
    auto points = sampler.sample_n(rng, n);
    auto sample = label_by_function(points, target_table);
    try {
      int hypothesis = rule(sample);
      if (hypothesis < 0 || hypothesis >= cls.size())
        throw validation_error("rule returned an index outside the class");
      report.errors[t] = l1_distance(mu, cls.functions[hypothesis], target_table);
    } catch (const validation_error&) {
      report.errors[t] = 1;
      rule_errors[t] = 1;
    }
  });

  for (char flagged : rule_errors) report.rule_error_count += flagged;
  summarize_errors(report, eps);
  return report;
}

}  // namespace pacdim

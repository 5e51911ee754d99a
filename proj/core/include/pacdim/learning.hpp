#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pacdim/classes.hpp"
#include "pacdim/measure.hpp"

namespace pacdim {

/// The whole point of the order presets: which consistent member a rule
/// returns depends on the scan order, and that decides whether large
/// targets are learnable. dudley-durst scans the generated (size, lex)
/// order; behw-fixed moves the empty set and Omega to the front.
enum class OrderPreset { kDudleyDurst, kBehwFixed };

std::string_view order_preset_name(OrderPreset preset);
std::optional<OrderPreset> order_preset_from_name(std::string_view name);

struct OrderedClass {
  ConceptClass cls;
  std::vector<int> order;  // scan positions -> concept index, a bijection

  void validate() const;
};

OrderedClass with_preset_order(ConceptClass cls, OrderPreset preset);

struct OrderedFunctionClass {
  FunctionClass cls;
  std::vector<int> order;

  void validate() const;
};

OrderedFunctionClass with_preset_order(FunctionClass cls, OrderPreset preset);

/// Earliest member in scan order whose trace on the sample matches the
/// labels; throws validation_error("inconsistent sample...") if none does.
int first_consistent(const OrderedClass& rule, const LabeledSample& sample);
int first_consistent(const OrderedFunctionClass& rule, const LabeledSample& sample);

/// Smallest segment (in scan order) containing the positively labeled
/// points. Negative labels are ignored, matching the defining formula; the
/// class must be nested along the order.
int min_containing_segment(const OrderedClass& rule, const LabeledSample& sample);

/// Full finite/cofinite family evaluated in closed form; equivalent to
/// scanning the materialized (size, lex)-ordered family, but usable at any
/// N. Returns the hypothesis set itself.
struct FiniteCofiniteFamily {
  int n_points = 0;
  int max_size = 0;
  OrderPreset order = OrderPreset::kDudleyDurst;

  DomainSet first_consistent(const LabeledSample& sample) const;
};

/// Decodes the target from any single labeled value: code = min(r, 1-r).
struct ExactCodeRule {
  std::map<Rational, int> code_to_index;

  static ExactCodeRule from_codes(const std::vector<Rational>& codes);
  int decode(const LabeledSample& sample) const;
};

struct PACEvalReport {
  std::string rule;
  std::string target;
  long long n = 0;
  int trials = 0;
  int exceed_count = 0;
  double exceed_rate = 0.0;
  int rule_error_count = 0;  // trials the rule rejected; counted as error 1
  std::vector<Rational> errors;
  double err_min = 0, err_median = 0, err_max = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
};

/// Monte Carlo PAC evaluation of a concept rule: per trial draws an
/// i.i.d. n-sample, labels it by the target, runs the rule and scores
/// mu(hypothesis triangle target) exactly. Trial t uses rng stream t.
using ConceptRule = std::function<DomainSet(const LabeledSample&)>;
PACEvalReport evaluate_pac(const ConceptRule& rule, const DomainSet& target,
                           const DiscreteMeasure& mu, int n, int trials, const Rational& eps,
                           std::uint64_t seed, int threads = 1);

/// Function-class variant scoring the L1 distance; the rule returns an index
/// into the class.
using FunctionRule = std::function<int(const LabeledSample&)>;
PACEvalReport evaluate_pac(const FunctionClass& cls, const FunctionRule& rule, int target_index,
                           const DiscreteMeasure& mu, int n, int trials, const Rational& eps,
                           std::uint64_t seed, int threads = 1);

}  // namespace pacdim

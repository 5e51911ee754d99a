#pragma once

#include <string>
#include <vector>

#include "pacdim/domain.hpp"
#include "pacdim/rational.hpp"

namespace pacdim {

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;   // invariant violations
  std::vector<std::string> warnings;   // flagged but permitted (duplicates, ...)
};

/// Ordered family of subsets of one domain. Duplicates are retained because
/// index identity matters for order-based learning rules; validation flags
/// them as warnings.
struct ConceptClass {
  Domain domain;
  std::vector<DomainSet> concepts;
  std::vector<std::string> names;  // optional labels, empty or one per concept

  ConceptClass() = default;
  ConceptClass(Domain d, std::vector<DomainSet> cs) : domain(d), concepts(std::move(cs)) {}

  int size() const { return static_cast<int>(concepts.size()); }

  /// Throws validation_error on invariant violations.
  void validate() const;
  ValidationReport validation_report() const;
};

/// Ordered family of [0,1]-valued tables over one domain.
struct FunctionClass {
  Domain domain;
  std::vector<std::vector<Rational>> functions;

  FunctionClass() = default;
  FunctionClass(Domain d, std::vector<std::vector<Rational>> fs)
      : domain(d), functions(std::move(fs)) {}

  int size() const { return static_cast<int>(functions.size()); }

  void validate() const;
  ValidationReport validation_report() const;
};

/// Builds the indicator tables of a concept class.
FunctionClass indicator_class(const ConceptClass& c);

/// Sample points with [0,1] labels; for concept samples labels are 0/1.
struct LabeledSample {
  std::vector<int> points;
  std::vector<Rational> labels;

  void validate(const Domain& domain, bool binary_labels) const;
  bool binary() const;
};

/// Labels `points` by a target set (0/1 labels).
LabeledSample label_by_concept(const std::vector<int>& points, const DomainSet& target);
/// Labels `points` by a target value table.
LabeledSample label_by_function(const std::vector<int>& points, const std::vector<Rational>& target);

}  // namespace pacdim

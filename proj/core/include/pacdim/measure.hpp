#pragma once

#include <vector>

#include "pacdim/classes.hpp"
#include "pacdim/domain.hpp"
#include "pacdim/rational.hpp"

namespace pacdim {

/// Probability weights over a finite domain, exact rationals summing to 1.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  DiscreteMeasure(Domain d, std::vector<Rational> weights);

  static DiscreteMeasure uniform(Domain d);
  static DiscreteMeasure point_mass(Domain d, int point);
  /// Uniform on a nonempty subset.
  static DiscreteMeasure uniform_on(const DomainSet& support);

  Domain domain() const { return domain_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int p) const { return weights_.at(p); }

  Rational mass(const DomainSet& set) const;
  Rational expectation(const std::vector<Rational>& table) const;
  DomainSet support() const;

 private:
  Domain domain_{};
  std::vector<Rational> weights_;
};

/// mu(A triangle B), the pseudometric of concept learning.
Rational symdiff_distance(const DiscreteMeasure& mu, const DomainSet& a, const DomainSet& b);

/// sum_x mu(x) * |f(x) - g(x)|.
Rational l1_distance(const DiscreteMeasure& mu, const std::vector<Rational>& f,
                     const std::vector<Rational>& g);

/// Uniform measure on a nonempty point list; weight of x is multiplicity/n.
DiscreteMeasure empirical_measure(Domain domain, const std::vector<int>& points);

}  // namespace pacdim

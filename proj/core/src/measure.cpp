#include "pacdim/measure.hpp"

namespace pacdim {

DiscreteMeasure::DiscreteMeasure(Domain d, std::vector<Rational> weights)
    : domain_(d), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != domain_.size)
    throw validation_error("measure needs one weight per domain point");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw validation_error("measure weights must be nonnegative");
    total += w;
  }
  if (total != 1) throw validation_error("measure weights must sum exactly to 1");
}

DiscreteMeasure DiscreteMeasure::uniform(Domain d) {
  return DiscreteMeasure(d, std::vector<Rational>(d.size, Rational(1, d.size)));
}

DiscreteMeasure DiscreteMeasure::point_mass(Domain d, int point) {
  std::vector<Rational> w(d.size, Rational(0));
  w.at(point) = 1;
  return DiscreteMeasure(d, std::move(w));
}

DiscreteMeasure DiscreteMeasure::uniform_on(const DomainSet& support) {
  int n = support.count();
  if (n == 0) throw validation_error("uniform_on needs a nonempty support");
  std::vector<Rational> w(support.domain_size(), Rational(0));
  for (int p = support.find_first(); p >= 0; p = support.find_next(p)) w[p] = Rational(1, n);
  return DiscreteMeasure(support.domain(), std::move(w));
}

Rational DiscreteMeasure::mass(const DomainSet& set) const {
  if (set.domain() != domain_) throw validation_error("domain mismatch between measure and set");
  Rational total = 0;
  for (int p = set.find_first(); p >= 0; p = set.find_next(p)) total += weights_[p];
  return total;
}

Rational DiscreteMeasure::expectation(const std::vector<Rational>& table) const {
  if (static_cast<int>(table.size()) != domain_.size)
    throw validation_error("domain mismatch between measure and table");
  Rational total = 0;
  for (int p = 0; p < domain_.size; ++p)
    if (weights_[p] != 0) total += weights_[p] * table[p];
  return total;
}

DomainSet DiscreteMeasure::support() const {
  DomainSet s(domain_);
  for (int p = 0; p < domain_.size; ++p)
    if (weights_[p] != 0) s.set(p);
  return s;
}

Rational symdiff_distance(const DiscreteMeasure& mu, const DomainSet& a, const DomainSet& b) {
  a.check_same_domain(b);
  return mu.mass(a ^ b);
}

Rational l1_distance(const DiscreteMeasure& mu, const std::vector<Rational>& f,
                     const std::vector<Rational>& g) {
  if (f.size() != g.size() || static_cast<int>(f.size()) != mu.domain().size)
    throw validation_error("domain mismatch between measure and tables");
  Rational total = 0;
  for (int p = 0; p < mu.domain().size; ++p) {
    if (mu.weight(p) == 0) continue;
    Rational diff = f[p] - g[p];
    if (diff < 0) diff = -diff;
    total += mu.weight(p) * diff;
  }
  return total;
}

DiscreteMeasure empirical_measure(Domain domain, const std::vector<int>& points) {
  if (points.empty()) throw validation_error("empirical measure needs a nonempty sample");
  std::vector<Rational> w(domain.size, Rational(0));
  Rational unit(1, static_cast<int>(points.size()));
  for (int p : points) {
    if (p < 0 || p >= domain.size) throw validation_error("sample point outside domain");
    w[p] += unit;
  }
  return DiscreteMeasure(domain, std::move(w));
}

}  // namespace pacdim

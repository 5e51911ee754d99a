#pragma once

#include "pacdim/classes.hpp"
#include "pacdim/dimensions.hpp"
#include "pacdim/measure.hpp"

namespace pacdim {

struct PackingResult {
  int size = 0;
  bool exact = true;
  std::vector<int> members;  // concept indices realizing the packing
};

/// Maximum subset of the class pairwise at d_mu distance strictly greater
/// than r. Exact branch-and-bound clique search on the separation graph up to
/// 64 concepts; beyond that a greedy maximal packing is returned as a lower
/// bound with exact=false.
PackingResult packing_number(const ConceptClass& c, const DiscreteMeasure& mu,
                             const Rational& r);

/// Measure giving each cluster total mass 1/d, uniform within each cluster,
/// zero elsewhere. Clusters must be pairwise disjoint.
DiscreteMeasure shattered_measure(const ClusterFamily& family);

}  // namespace pacdim

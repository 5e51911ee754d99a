#pragma once

#include <vector>

#include "pacdim/classes.hpp"
#include "pacdim/measure.hpp"
#include "pacdim/rational.hpp"
#include "pacdim/sampling.hpp"

// Brute-force reference implementations, deliberately written without the
// pruning, deduplication or search-order tricks of the library paths.
namespace pacdim::oracle {

bool shatters_naive(const ConceptClass& c, const std::vector<int>& points);
int vc_dimension_naive(const ConceptClass& c);

/// Literal definition check: for a fixed witness, every pattern needs a
/// function above/below the margin. Witness candidates per point are all
/// midpoints of realized value pairs plus the eps-shifted values clipped to
/// [0,1]; the search tries every combination.
int fat_dimension_grid(const FunctionClass& f, const Rational& eps, int max_n);

/// Exhaustive max subset pairwise more than r apart (class size <= ~15).
int packing_naive(const ConceptClass& c, const DiscreteMeasure& mu, const Rational& r);

// deterministic random instances for property tests
ConceptClass random_class(RngStream& rng, int max_domain, int max_concepts);
DomainSet random_set(RngStream& rng, const Domain& d);
DiscreteMeasure random_measure(RngStream& rng, const Domain& d);
FunctionClass random_function_class(RngStream& rng, int max_domain, int max_functions,
                                    int denominator);

}  // namespace pacdim::oracle

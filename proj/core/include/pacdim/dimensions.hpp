#pragma once

#include <optional>
#include <vector>

#include "pacdim/classes.hpp"
#include "pacdim/quotient.hpp"
#include "pacdim/rational.hpp"

namespace pacdim {

/// Margin levels certifying a fat shattering, one per shattered point or
/// cluster.
struct WitnessFunction {
  std::vector<Rational> levels;
};

/// Selector table of a shattering: selectors[J] is the index of the class
/// member realizing pattern J, where bit i of J corresponds to element i of
/// the shattered tuple (or cluster family). Replaying the table against the
/// class re-verifies the shattering.
struct ShatterCertificate {
  int n = 0;
  std::vector<int> selectors;  // size 1 << n
  std::optional<WitnessFunction> witness;
  std::optional<Rational> epsilon;
};

struct ShatterCheck {
  bool shattered = false;
  std::optional<ShatterCertificate> certificate;
};

struct DimensionResult {
  int dimension = 0;
  bool capped = false;      // true if the search stopped at the requested cap
  std::vector<int> points;  // witnessing tuple for `dimension` (empty if 0)
  std::optional<ShatterCertificate> certificate;
};

/// Classical shattering of a tuple of pairwise distinct points.
ShatterCheck shatters(const ConceptClass& c, const std::vector<int>& points);

/// Largest n such that some n-point tuple is shattered; exact search with
/// pruning. `max_n` caps the search (the result is then a lower bound,
/// flagged `capped` when the cap was reached).
DimensionResult vc_dimension_search(const ConceptClass& c, std::optional<int> max_n = {});
int vc_dimension(const ConceptClass& c);

/// Family of nonempty clusters. Pairwise disjointness is not required on
/// construction; shattering forces it a posteriori.
struct ClusterFamily {
  Domain domain;
  std::vector<DomainSet> clusters;

  void validate() const;
  bool pairwise_disjoint() const;
};

/// For each J there must be a concept containing every cluster indexed by J
/// and disjoint from all the others.
ShatterCheck cluster_shatters(const ConceptClass& c, const ClusterFamily& family);

/// Admissibility condition on clusters: lying outside a principal ideal
/// (NOT_NULL), carrying at least t points (MIN_SIZE), or both. MIN_SIZE is a
/// declared surrogate for "uncountable", not an ideal.
struct ClusterConstraint {
  std::optional<NullRegion> not_null;
  std::optional<int> min_size;

  static ClusterConstraint not_null_of(NullRegion z) { return {std::move(z), {}}; }
  static ClusterConstraint min_size_of(int t) { return {{}, t}; }
  static ClusterConstraint both_of(NullRegion z, int t) { return {std::move(z), t}; }

  void validate(const Domain& domain) const;
  bool admits(const DomainSet& cluster) const;
};

struct ClusterDimensionResult {
  int dimension = 0;
  bool capped = false;
  std::optional<ShatterCertificate> certificate;
  std::optional<ClusterFamily> clusters;  // witnessing atom family
};

/// Max n admitting a cluster family satisfying the constraint and
/// cluster-shattered by the class. Exact search over selector assignments
/// J -> C_J, testing the induced atoms; depth-first in class-index order, so
/// certificates are deterministic.
ClusterDimensionResult cluster_vc(const ConceptClass& c, const ClusterConstraint& k,
                                  std::optional<int> max_n = {}, int threads = 1);

/// Atom family carved out of a selector table:
/// A_i = intersection of C_J over J containing i, intersected with the
/// complements of the remaining C_J. Throws if some atom comes out empty.
ClusterFamily witness_clusters(const ShatterCertificate& cert, const ConceptClass& c);

/// Eq-(fb) check: strict margins around the witness levels.
ShatterCheck fat_shatters(const FunctionClass& f, const std::vector<int>& points,
                          const Rational& eps, const WitnessFunction& h);

/// Max n such that some n-tuple is eps-fat shattered for some witness.
DimensionResult fat_dimension_search(const FunctionClass& f, const Rational& eps,
                                     std::optional<int> max_n = {});
int fat_dimension(const FunctionClass& f, const Rational& eps);

/// Cluster version: witness levels live on cluster indices and the margin
/// conditions hold uniformly on each cluster.
ClusterDimensionResult cluster_fat_dimension(const FunctionClass& f, const Rational& eps,
                                             const ClusterConstraint& k,
                                             std::optional<int> max_n = {});

struct RationalizedWitness {
  Rational eps_prime;
  WitnessFunction witness;
};

/// Strictly enlarges the shattering margin and produces a rational witness:
/// with S_a = min over positive selectors and s_a = max over negative ones,
/// picks eps'_a strictly inside (eps, (S_a-s_a)/2) and h'(a) at the midpoint
/// of (s_a, S_a); eps' = min_a eps'_a. The same selectors then witness
/// eps'-fat shattering with h'.
RationalizedWitness rationalize_witness(const FunctionClass& f, const std::vector<int>& points,
                                        const Rational& eps, const ShatterCertificate& cert);

}  // namespace pacdim

#pragma once

#include <vector>

#include "pacdim/classes.hpp"
#include "pacdim/domain.hpp"

namespace pacdim {

/// Principal set ideal P(Z) on a finite domain: the sets contained in Z.
/// Every downward- and union-closed family on a finite domain is of this
/// shape, so a designated null set captures all ideals we can represent.
struct NullRegion {
  Domain domain;
  DomainSet z;

  NullRegion() = default;
  NullRegion(Domain d, DomainSet z_) : domain(d), z(std::move(z_)) {
    if (z.domain() != domain) throw validation_error("null region domain mismatch");
  }
  static NullRegion empty(Domain d) { return NullRegion(d, DomainSet(d)); }
};

/// 2^Omega / P(Z) is isomorphic to the powerset of Omega\Z; its atoms (the
/// finite stand-in for the Stone space) are the points outside Z.
struct QuotientAlgebra {
  Domain domain;
  NullRegion null_region;
  std::vector<int> atoms;  // increasing
};

/// True iff a is a member of the ideal, i.e. a subset of Z.
bool is_null(const NullRegion& ideal, const DomainSet& a);

QuotientAlgebra quotient_atoms(const NullRegion& ideal);

struct TracedClass {
  ConceptClass cls;            // over the sub-domain Omega\Z, original order kept
  std::vector<int> index_map;  // position -> original domain point
};

/// Restriction of the class to Omega\Z, re-indexed to 0..|Omega\Z|-1.
/// Rejects z = Omega (empty trace domain).
TracedClass trace_class(const ConceptClass& c, const NullRegion& ideal);

}  // namespace pacdim

#include "pacdim/quotient.hpp"

namespace pacdim {

bool is_null(const NullRegion& ideal, const DomainSet& a) {
  if (a.domain() != ideal.domain) throw validation_error("domain mismatch with null region");
  return a.is_subset_of(ideal.z);
}

QuotientAlgebra quotient_atoms(const NullRegion& ideal) {
  QuotientAlgebra q;
  q.domain = ideal.domain;
  q.null_region = ideal;
  for (int p = 0; p < ideal.domain.size; ++p)
    if (!ideal.z.test(p)) q.atoms.push_back(p);
  return q;
}

TracedClass trace_class(const ConceptClass& c, const NullRegion& ideal) {
  c.validate();
  if (c.domain != ideal.domain) throw validation_error("domain mismatch with null region");
  auto atoms = quotient_atoms(ideal).atoms;
  if (atoms.empty()) throw validation_error("trace over z = Omega has an empty domain");

  TracedClass traced;
  traced.index_map = atoms;
  Domain sub(static_cast<int>(atoms.size()));
  traced.cls.domain = sub;
  traced.cls.names = c.names;
  traced.cls.concepts.reserve(c.concepts.size());
  for (const auto& concept_set : c.concepts) {
    DomainSet t(sub);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (concept_set.test(atoms[i])) t.set(static_cast<int>(i));
    traced.cls.concepts.push_back(std::move(t));
  }
  return traced;
}

}  // namespace pacdim

#include "pacdim/domain.hpp"

namespace pacdim {

bool DomainSet::lex_less(const DomainSet& a, const DomainSet& b) {
  a.check_same_domain(b);
  int pa = a.find_first();
  int pb = b.find_first();
  while (pa >= 0 && pb >= 0) {
    if (pa != pb) return pa < pb;
    pa = a.find_next(pa);
    pb = b.find_next(pb);
  }
  // equal prefix: the shorter sequence comes first
  return pa < 0 && pb >= 0;
}

}  // namespace pacdim

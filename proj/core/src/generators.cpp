#include "pacdim/generators.hpp"

#include <algorithm>
#include <set>

#include "pacdim/errors.hpp"
#include "pacdim/sampling.hpp"

namespace pacdim {

namespace {

void sort_by_size_then_lex(std::vector<DomainSet>& sets) {
  std::stable_sort(sets.begin(), sets.end(), [](const DomainSet& a, const DomainSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return DomainSet::lex_less(a, b);
  });
}

/// All k-subsets of 0..n-1 in lex order.
template <typename Emit>
void for_each_combination(int n, int k, const Emit& emit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    emit(idx);
    return;
  }
  while (true) {
    emit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConceptClass gen_finite_cofinite(int n_points, int max_size, const GeneratorGuard& guard,
                                 GuardInfo* info) {
  Domain dom(n_points);
  if (max_size < 1 || 2 * max_size >= n_points)
    throw validation_error("finite/cofinite generator needs 0 < m < N/2");

  BigInt small_count = 0;
  for (int k = 0; k <= max_size; ++k) small_count += binomial(n_points, k);
  BigInt full_size = 2 * small_count;
  if (info) {
    info->full_size = full_size.str();
    info->subsampled = full_size > guard.cap;
  }

  std::vector<DomainSet> members;
  if (full_size <= guard.cap) {
    for (int k = 0; k <= max_size; ++k)
      for_each_combination(n_points, k, [&](const std::vector<int>& idx) {
        members.push_back(DomainSet::from_points(dom, idx));
      });
    std::size_t smalls = members.size();
    for (std::size_t i = 0; i < smalls; ++i) members.push_back(members[i].complement());
  } else {
    if (!guard.subsample_seed)
      throw guard_error("finite/cofinite family has " + full_size.str() +
                        " members, over the enumeration cap of " + std::to_string(guard.cap) +
                        "; supply a subsample seed to draw a subfamily");
    if (guard.cap < 4) throw validation_error("subsample cap too small");
    RngStream rng(*guard.subsample_seed, 0);
    std::set<std::vector<std::uint64_t>> seen;
    members.push_back(DomainSet(dom));
    members.push_back(DomainSet::full(dom));
    seen.insert(members[0].blocks());
    seen.insert(members[1].blocks());
    const std::size_t want_smalls = (guard.cap - 2) / 2;
    std::vector<DomainSet> smalls;
    while (smalls.size() < want_smalls) {
      int k = 1 + static_cast<int>(rng.next() % max_size);
      std::set<int> pts;
      while (static_cast<int>(pts.size()) < k)
        pts.insert(static_cast<int>(rng.next() % n_points));
      DomainSet s(dom);
      for (int p : pts) s.set(p);
      if (seen.insert(s.blocks()).second) smalls.push_back(std::move(s));
    }
    for (const auto& s : smalls) {
      auto co = s.complement();
      if (seen.insert(co.blocks()).second) members.push_back(co);
      members.push_back(s);
    }
  }
  sort_by_size_then_lex(members);
  if (info) info->emitted = members.size();
  return ConceptClass(dom, std::move(members));
}

ConceptClass gen_initial_segments(int n_points) {
  Domain dom(n_points);
  std::vector<DomainSet> segments;
  segments.reserve(n_points + 1);
  DomainSet running(dom);
  segments.push_back(running);
  for (int y = 0; y < n_points; ++y) {
    running.set(y);
    segments.push_back(running);
  }
  return ConceptClass(dom, std::move(segments));
}

IntervalCodeClass gen_interval_code(int order, int grid, const GeneratorGuard& guard,
                                    GuardInfo* info) {
  if (order < 8) throw validation_error("interval-code generator needs order >= 8");
  if (grid < order || grid % order != 0)
    throw validation_error("grid must be a positive multiple of the order");

  int max_cells = 1;
  while ((max_cells + 1) * (max_cells + 1) * (max_cells + 1) <= order) ++max_cells;

  Domain dom(grid);
  const int width = grid / order;
  std::vector<DomainSet> cells;
  cells.reserve(order);
  for (int i = 0; i < order; ++i) {
    DomainSet cell(dom);
    for (int j = i * width; j < (i + 1) * width; ++j) cell.set(j);
    cells.push_back(std::move(cell));
  }

  BigInt full_size = 0;
  for (int k = 0; k <= max_cells; ++k) full_size += binomial(order, k);
  if (info) {
    info->full_size = full_size.str();
    info->subsampled = full_size > guard.cap;
  }

  std::vector<DomainSet> unions;
  if (full_size <= guard.cap) {
    for (int k = 0; k <= max_cells; ++k)
      for_each_combination(order, k, [&](const std::vector<int>& idx) {
        DomainSet u(dom);
        for (int i : idx) u |= cells[i];
        unions.push_back(std::move(u));
      });
  } else {
    if (!guard.subsample_seed)
      throw guard_error("interval-code family has " + full_size.str() +
                        " members, over the enumeration cap of " + std::to_string(guard.cap) +
                        "; supply a subsample seed to draw a subfamily");
    RngStream rng(*guard.subsample_seed, 0);
    std::set<std::vector<std::uint64_t>> seen;
    unions.push_back(DomainSet(dom));  // the empty union is always coded
    seen.insert(unions[0].blocks());
    while (unions.size() < guard.cap) {
      int k = 1 + static_cast<int>(rng.next() % max_cells);
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < k)
        pick.insert(static_cast<int>(rng.next() % order));
      DomainSet u(dom);
      for (int i : pick) u |= cells[i];
      if (seen.insert(u.blocks()).second) unions.push_back(std::move(u));
    }
  }

  IntervalCodeClass out;
  out.order = order;
  out.grid = grid;
  out.concepts = std::move(unions);
  const std::size_t m = out.concepts.size();
  out.codes.reserve(m);
  out.functions.domain = dom;
  out.functions.functions.reserve(m);
  for (std::size_t q = 0; q < m; ++q) {
    Rational code = m == 1 ? Rational(0) : Rational(q, 3 * (m - 1));
    std::vector<Rational> table(grid, code);
    const auto& set = out.concepts[q];
    for (int p = set.find_first(); p >= 0; p = set.find_next(p)) table[p] = 1 - code;
    out.codes.push_back(std::move(code));
    out.functions.functions.push_back(std::move(table));
  }
  if (info) info->emitted = m;
  return out;
}

}  // namespace pacdim

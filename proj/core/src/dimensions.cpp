#include "pacdim/dimensions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>

namespace pacdim {

namespace {

constexpr int kMaxTupleSize = 20;  // 2^n selector tables

struct DistinctConcepts {
  int words = 0;
  std::vector<std::uint64_t> masks;  // flattened, `words` per concept
  std::vector<int> first_index;      // distinct index -> first original index
  std::vector<int> sizes;

  int count() const { return static_cast<int>(first_index.size()); }
  const std::uint64_t* mask(int i) const {
    return masks.data() + static_cast<std::size_t>(i) * words;
  }
};

DistinctConcepts dedupe_concepts(const ConceptClass& c) {
  DistinctConcepts d;
  d.words = (c.domain.size + 63) / 64;
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int i = 0; i < c.size(); ++i) {
    const auto& blocks = c.concepts[i].blocks();
    if (seen.try_emplace(blocks, i).second) {
      d.masks.insert(d.masks.end(), blocks.begin(), blocks.end());
      d.first_index.push_back(i);
      d.sizes.push_back(c.concepts[i].count());
    }
  }
  return d;
}

inline bool mask_test(const std::uint64_t* mask, int p) {
  return (mask[p >> 6] >> (p & 63)) & 1;
}

int flood_log2(int m) {
  int n = 0;
  while ((1 << (n + 1)) <= m && n + 1 <= kMaxTupleSize) ++n;
  return n;
}

/// Realized |C & T| weights must cover 0..n for T to be shatterable.
bool weights_cover(const DistinctConcepts& d, const std::vector<std::uint64_t>& tuple_mask,
                   int n) {
  const std::uint32_t target = (n + 1 >= 32) ? ~0u : ((1u << (n + 1)) - 1);
  std::uint32_t achieved = 0;
  const std::size_t words = tuple_mask.size();
  for (int i = 0; i < d.count(); ++i) {
    const std::uint64_t* m = d.mask(i);
    int w = 0;
    for (std::size_t b = 0; b < words; ++b) w += __builtin_popcountll(m[b] & tuple_mask[b]);
    achieved |= 1u << w;
    if (achieved == target) return true;
  }
  return false;
}

/// Collects the first distinct concept realizing each trace pattern.
bool patterns_complete(const DistinctConcepts& d, const std::vector<int>& pts,
                       std::vector<int>* selectors) {
  const int n = static_cast<int>(pts.size());
  const std::size_t table = std::size_t{1} << n;
  std::vector<int> seen(table, -1);
  std::size_t found = 0;
  for (int i = 0; i < d.count() && found < table; ++i) {
    const std::uint64_t* m = d.mask(i);
    std::size_t pattern = 0;
    for (int k = 0; k < n; ++k) pattern |= std::size_t{mask_test(m, pts[k])} << k;
    if (seen[pattern] < 0) {
      seen[pattern] = i;
      ++found;
    }
  }
  if (found < table) return false;
  if (selectors) *selectors = std::move(seen);
  return true;
}

/// Size-interval refutation for a whole level: a pattern of weight w on an
/// n-tuple needs a concept with w <= |C| <= w + (N - n).
bool level_possible_by_sizes(const std::vector<int>& sorted_sizes, int domain_size, int n) {
  for (int w = 0; w <= n; ++w) {
    auto it = std::lower_bound(sorted_sizes.begin(), sorted_sizes.end(), w);
    if (it == sorted_sizes.end() || *it > w + (domain_size - n)) return false;
  }
  return true;
}

/// Representative points of distinct concept-membership columns.
struct ColumnGroups {
  std::vector<int> reps;                           // ascending
  std::vector<std::vector<std::uint64_t>> columns; // per rep, bits over distinct concepts
  std::vector<std::vector<int>> members;           // per rep, the grouped points
};

ColumnGroups group_columns(const DistinctConcepts& d, int domain_size) {
  ColumnGroups g;
  const int colwords = (d.count() + 63) / 64;
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int p = 0; p < domain_size; ++p) {
    std::vector<std::uint64_t> col(colwords, 0);
    for (int i = 0; i < d.count(); ++i)
      if (mask_test(d.mask(i), p)) col[i >> 6] |= std::uint64_t{1} << (i & 63);
    auto [it, inserted] = seen.try_emplace(std::move(col), static_cast<int>(g.reps.size()));
    if (inserted) {
      g.reps.push_back(p);
      g.columns.push_back(it->first);
      g.members.push_back({p});
    } else {
      g.members[it->second].push_back(p);
    }
  }
  return g;
}

/// All four trace patterns on a pair of columns.
bool pair_shattered(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                    int concept_count) {
  bool q11 = false, q10 = false, q01 = false, q00 = false;
  const std::size_t words = a.size();
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t live = ~std::uint64_t{0};
    if (w + 1 == words && (concept_count & 63))
      live = (std::uint64_t{1} << (concept_count & 63)) - 1;
    q11 |= (a[w] & b[w]) != 0;
    q10 |= (a[w] & ~b[w] & live) != 0;
    q01 |= (~a[w] & b[w] & live) != 0;
    q00 |= (~a[w] & ~b[w] & live) != 0;
    if (q11 && q10 && q01 && q00) return true;
  }
  return false;
}

/// Lexicographic enumeration of n-subsets of `items` filtered by a pairwise
/// compatibility predicate; calls `try_tuple` until it returns true.
template <typename Compat, typename TryTuple>
bool enumerate_tuples(int item_count, int n, const Compat& compat, const TryTuple& try_tuple) {
  std::vector<int> chosen;
  chosen.reserve(n);
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == n) return try_tuple(chosen);
    // not enough items left
    for (int i = start; item_count - i >= n - static_cast<int>(chosen.size()); ++i) {
      bool ok = true;
      for (int j : chosen)
        if (!compat(j, i)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

ShatterCheck shatters(const ConceptClass& c, const std::vector<int>& points) {
  c.validate();
  const int n = static_cast<int>(points.size());
  if (n > kMaxTupleSize) throw validation_error("tuple too large for exact shattering search");
  std::vector<bool> dup(c.domain.size, false);
  for (int p : points) {
    if (p < 0 || p >= c.domain.size) throw validation_error("point outside domain");
    if (dup[p]) throw validation_error("duplicate points in tuple");
    dup[p] = true;
  }
  auto d = dedupe_concepts(c);
  std::vector<int> selectors;
  if (!patterns_complete(d, points, &selectors)) return {false, std::nullopt};
  ShatterCertificate cert;
  cert.n = n;
  cert.selectors.reserve(selectors.size());
  for (int idx : selectors) cert.selectors.push_back(d.first_index[idx]);
  return {true, std::move(cert)};
}

DimensionResult vc_dimension_search(const ConceptClass& c, std::optional<int> max_n) {
  c.validate();
  DimensionResult result;
  auto d = dedupe_concepts(c);
  const int N = c.domain.size;
  auto groups = group_columns(d, N);

  // points that are shattered on their own (column not constant)
  std::vector<int> usable;
  for (std::size_t r = 0; r < groups.reps.size(); ++r) {
    bool any = false, all = true;
    for (int i = 0; i < d.count(); ++i) {
      if (mask_test(d.mask(i), groups.reps[r]))
        any = true;
      else
        all = false;
    }
    if (any && !all) usable.push_back(static_cast<int>(r));
  }

  std::vector<int> sorted_sizes = d.sizes;
  std::sort(sorted_sizes.begin(), sorted_sizes.end());
  sorted_sizes.erase(std::unique(sorted_sizes.begin(), sorted_sizes.end()), sorted_sizes.end());

  int cap = std::min<int>(static_cast<int>(usable.size()), flood_log2(d.count()));
  if (max_n) cap = std::min(cap, *max_n);

  std::vector<std::vector<bool>> compat;  // over usable indices, built lazily
  for (int n = 1; n <= cap; ++n) {
    if (!level_possible_by_sizes(sorted_sizes, N, n)) break;
    if (n == 2 && compat.empty()) {
      compat.assign(usable.size(), std::vector<bool>(usable.size(), false));
      for (std::size_t a = 0; a < usable.size(); ++a)
        for (std::size_t b = a + 1; b < usable.size(); ++b) {
          bool ok = pair_shattered(groups.columns[usable[a]], groups.columns[usable[b]],
                                   d.count());
          compat[a][b] = compat[b][a] = ok;
        }
    }
    auto compat_fn = [&](int a, int b) { return n < 2 || compat[a][b]; };
    bool found = enumerate_tuples(
        static_cast<int>(usable.size()), n, compat_fn, [&](const std::vector<int>& chosen) {
          std::vector<int> pts(n);
          std::vector<std::uint64_t> tuple_mask(d.words, 0);
          for (int k = 0; k < n; ++k) {
            pts[k] = groups.reps[usable[chosen[k]]];
            tuple_mask[pts[k] >> 6] |= std::uint64_t{1} << (pts[k] & 63);
          }
          if (!weights_cover(d, tuple_mask, n)) return false;
          std::vector<int> selectors;
          if (!patterns_complete(d, pts, &selectors)) return false;
          result.dimension = n;
          result.points = pts;
          ShatterCertificate cert;
          cert.n = n;
          for (int idx : selectors) cert.selectors.push_back(d.first_index[idx]);
          result.certificate = std::move(cert);
          return true;
        });
    if (!found) {
      result.capped = false;
      return result;
    }
  }
  result.capped = max_n.has_value() && result.dimension == *max_n;
  return result;
}

int vc_dimension(const ConceptClass& c) { return vc_dimension_search(c).dimension; }

void ClusterFamily::validate() const {
  if (clusters.empty()) throw validation_error("cluster family must be nonempty");
  for (const auto& a : clusters) {
    if (a.domain() != domain) throw validation_error("cluster domain mismatch");
    if (a.empty()) throw validation_error("clusters must be nonempty");
  }
}

bool ClusterFamily::pairwise_disjoint() const {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j)
      if (clusters[i].intersects(clusters[j])) return false;
  return true;
}

ShatterCheck cluster_shatters(const ConceptClass& c, const ClusterFamily& family) {
  c.validate();
  family.validate();
  if (family.domain != c.domain) throw validation_error("cluster family domain mismatch");
  const int n = static_cast<int>(family.clusters.size());
  if (n > kMaxTupleSize) throw validation_error("cluster family too large for exact search");

  ShatterCertificate cert;
  cert.n = n;
  cert.selectors.assign(std::size_t{1} << n, -1);
  for (std::size_t J = 0; J < cert.selectors.size(); ++J) {
    DomainSet pos(c.domain), neg(c.domain);
    for (int i = 0; i < n; ++i) {
      if (J >> i & 1)
        pos |= family.clusters[i];
      else
        neg |= family.clusters[i];
    }
    int match = -1;
    for (int j = 0; j < c.size(); ++j) {
      if (pos.is_subset_of(c.concepts[j]) && !c.concepts[j].intersects(neg)) {
        match = j;
        break;
      }
    }
    if (match < 0) return {false, std::nullopt};
    cert.selectors[J] = match;
  }
  return {true, std::move(cert)};
}

void ClusterConstraint::validate(const Domain& domain) const {
  if (!not_null && !min_size) throw validation_error("cluster constraint must be set");
  if (min_size && *min_size < 1) throw validation_error("MIN_SIZE threshold must be >= 1");
  if (not_null && not_null->domain != domain)
    throw validation_error("cluster constraint domain mismatch");
}

bool ClusterConstraint::admits(const DomainSet& cluster) const {
  if (min_size && cluster.count() < *min_size) return false;
  if (not_null && cluster.is_subset_of(not_null->z)) return false;
  return true;
}

namespace {

/// One level of the selector-assignment search. Shared read-only setup;
/// each worker owns its own atom stack.
struct ClusterLevel {
  const ClusterConstraint* k = nullptr;
  int words = 0;
  int n = 0;
  std::size_t slot_count = 0;
  int concept_count = 0;
  const std::uint64_t* masks = nullptr;          // concept_count x words
  std::vector<std::vector<int>> lists;           // candidates per positive count
  std::vector<std::uint64_t> outside;            // complement of z (or all ones)
};

struct ClusterWorker {
  const ClusterLevel* level = nullptr;
  std::vector<std::uint64_t> atoms;  // (slot_count+1) x n x words
  std::vector<char> used;
  std::vector<int> chosen;

  explicit ClusterWorker(const ClusterLevel& lv) : level(&lv) {
    atoms.assign((lv.slot_count + 1) * lv.n * lv.words, 0);
    used.assign(lv.concept_count, 0);
    chosen.reserve(lv.slot_count);
  }

  std::uint64_t* atom(std::size_t depth, int i) {
    return atoms.data() + (depth * level->n + i) * level->words;
  }

  bool admissible(const std::uint64_t* a) const {
    const auto& k = *level->k;
    if (k.min_size) {
      int cnt = 0;
      for (int w = 0; w < level->words; ++w) cnt += __builtin_popcountll(a[w]);
      if (cnt < *k.min_size) return false;
    }
    if (k.not_null) {
      bool meets = false;
      for (int w = 0; w < level->words && !meets; ++w)
        meets = (a[w] & level->outside[w]) != 0;
      if (!meets) return false;
    }
    return true;
  }

  /// Applies candidate `idx` at `slot`; returns false if some atom dies.
  bool apply(std::size_t slot, int idx) {
    const std::uint64_t* m = level->masks + static_cast<std::size_t>(idx) * level->words;
    for (int i = 0; i < level->n; ++i) {
      const std::uint64_t* prev = atom(slot, i);
      std::uint64_t* next = atom(slot + 1, i);
      if (slot >> i & 1)
        for (int w = 0; w < level->words; ++w) next[w] = prev[w] & m[w];
      else
        for (int w = 0; w < level->words; ++w) next[w] = prev[w] & ~m[w];
      if (!admissible(next)) return false;
    }
    return true;
  }

  bool dfs(std::size_t slot) {
    if (slot == level->slot_count) return true;
    const int j = __builtin_popcountll(slot);
    for (int idx : level->lists[j]) {
      if (used[idx]) continue;
      if (!apply(slot, idx)) continue;
      used[idx] = 1;
      chosen.push_back(idx);
      if (dfs(slot + 1)) return true;
      chosen.pop_back();
      used[idx] = 0;
    }
    return false;
  }
};

/// First-level branch parallelism with a deterministic merge: the smallest
/// first-slot candidate index that extends to a full assignment wins, so the
/// result never depends on the schedule.
std::optional<std::vector<int>> run_level(const ClusterLevel& level, const DomainSet& full_init,
                                          int threads) {
  const auto& first_list = level.lists[0];
  auto init_worker = [&](ClusterWorker& w) {
    for (int i = 0; i < level.n; ++i)
      std::copy(full_init.blocks().begin(), full_init.blocks().end(), w.atom(0, i));
  };
  if (threads <= 1 || first_list.size() <= 1) {
    ClusterWorker worker(level);
    init_worker(worker);
    if (worker.dfs(0)) return worker.chosen;
    return std::nullopt;
  }
  threads = std::min<int>(threads, static_cast<int>(first_list.size()));
  std::atomic<int> winner(std::numeric_limits<int>::max());
  std::vector<std::vector<int>> solutions(first_list.size());
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      ClusterWorker worker(level);
      for (int pos = t; pos < static_cast<int>(first_list.size()); pos += threads) {
        if (pos > winner.load(std::memory_order_relaxed)) continue;
        init_worker(worker);
        std::fill(worker.used.begin(), worker.used.end(), 0);
        worker.chosen.clear();
        int idx = first_list[pos];
        if (!worker.apply(0, idx)) continue;
        worker.used[idx] = 1;
        worker.chosen.push_back(idx);
        if (worker.dfs(1)) {
          solutions[pos] = worker.chosen;
          int expected = winner.load(std::memory_order_relaxed);
          while (pos < expected &&
                 !winner.compare_exchange_weak(expected, pos, std::memory_order_relaxed)) {
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  int best = winner.load();
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return solutions[best];
}

}  // namespace

ClusterDimensionResult cluster_vc(const ConceptClass& c, const ClusterConstraint& k,
                                  std::optional<int> max_n, int threads) {
  c.validate();
  k.validate(c.domain);
  ClusterDimensionResult result;

  const int N = c.domain.size;
  DomainSet outside_set =
      k.not_null ? k.not_null->z.complement() : DomainSet::full(c.domain);
  const int outside_total = outside_set.count();

  // With a pure NOT_NULL constraint both pruning and admissibility depend
  // only on the part of each concept outside z, so the search runs on the
  // projected masks (and dedupes them); final atoms are rebuilt from the
  // original concepts.
  const bool project = k.not_null.has_value() && !k.min_size.has_value();
  DistinctConcepts d;
  if (project) {
    d.words = (N + 63) / 64;
    std::map<std::vector<std::uint64_t>, int> seen;
    for (int i = 0; i < c.size(); ++i) {
      DomainSet projected = c.concepts[i] & outside_set;
      if (seen.try_emplace(projected.blocks(), i).second) {
        d.masks.insert(d.masks.end(), projected.blocks().begin(), projected.blocks().end());
        d.first_index.push_back(i);
        d.sizes.push_back(projected.count());
      }
    }
  } else {
    d = dedupe_concepts(c);
  }
  const int words = d.words;

  // per-concept capacities for the static slot filters
  std::vector<int> in_pts(d.count()), out_pts(d.count()), in_live(d.count()),
      out_live(d.count());
  for (int i = 0; i < d.count(); ++i) {
    const std::uint64_t* m = d.mask(i);
    int live = 0;
    for (int w = 0; w < words; ++w)
      live += __builtin_popcountll(m[w] & outside_set.blocks()[w]);
    in_pts[i] = d.sizes[i];
    out_pts[i] = N - d.sizes[i];
    in_live[i] = live;
    out_live[i] = outside_total - live;
  }

  int cap = flood_log2(d.count());
  if (k.min_size) cap = std::min(cap, N / *k.min_size);
  if (k.not_null) cap = std::min(cap, outside_total);
  if (max_n) cap = std::min(cap, *max_n);

  const DomainSet search_universe = project ? outside_set : DomainSet::full(c.domain);

  for (int n = 1; n <= cap; ++n) {
    ClusterLevel level;
    level.k = &k;
    level.words = words;
    level.n = n;
    level.slot_count = std::size_t{1} << n;
    level.concept_count = d.count();
    level.masks = d.masks.data();
    level.outside = outside_set.blocks();
    level.lists.resize(n + 1);
    bool feasible = true;
    for (int j = 0; j <= n && feasible; ++j) {
      for (int i = 0; i < d.count(); ++i) {
        bool ok = true;
        if (k.min_size)
          ok = in_pts[i] >= j * *k.min_size && out_pts[i] >= (n - j) * *k.min_size;
        if (ok && k.not_null) ok = in_live[i] >= j && out_live[i] >= (n - j);
        if (ok) level.lists[j].push_back(i);
      }
      feasible = !level.lists[j].empty();
    }
    if (!feasible) return result;

    auto solution = run_level(level, search_universe, threads);
    if (!solution) return result;

    result.dimension = n;
    ShatterCertificate cert;
    cert.n = n;
    cert.selectors.reserve(level.slot_count);
    for (int idx : *solution) cert.selectors.push_back(d.first_index[idx]);
    // rebuild the true atoms from the original (unprojected) concepts
    ClusterFamily fam;
    fam.domain = c.domain;
    for (int i = 0; i < n; ++i) {
      DomainSet atom = DomainSet::full(c.domain);
      for (std::size_t J = 0; J < cert.selectors.size(); ++J) {
        const DomainSet& sel = c.concepts[cert.selectors[J]];
        if (J >> i & 1)
          atom &= sel;
        else
          atom.subtract(sel);
      }
      fam.clusters.push_back(std::move(atom));
    }
    result.certificate = std::move(cert);
    result.clusters = std::move(fam);
  }
  result.capped = max_n.has_value() && result.dimension == *max_n;
  return result;
}

ClusterFamily witness_clusters(const ShatterCertificate& cert, const ConceptClass& c) {
  c.validate();
  if (cert.n < 1) throw validation_error("certificate must cover at least one cluster");
  if (cert.selectors.size() != (std::size_t{1} << cert.n))
    throw validation_error("certificate selector table must have 2^n entries");
  for (int idx : cert.selectors)
    if (idx < 0 || idx >= c.size())
      throw validation_error("certificate selector index outside the class");

  ClusterFamily fam;
  fam.domain = c.domain;
  for (int i = 0; i < cert.n; ++i) {
    DomainSet atom = DomainSet::full(c.domain);
    for (std::size_t J = 0; J < cert.selectors.size(); ++J) {
      const DomainSet& sel = c.concepts[cert.selectors[J]];
      if (J >> i & 1)
        atom &= sel;
      else
        atom.subtract(sel);
    }
    if (atom.empty())
      throw validation_error("inconsistent certificate: induced cluster " + std::to_string(i) +
                             " is empty");
    fam.clusters.push_back(std::move(atom));
  }
  return fam;
}

}  // namespace pacdim

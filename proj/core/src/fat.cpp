#include <algorithm>
#include <map>

#include "pacdim/dimensions.hpp"

namespace pacdim {

namespace {

constexpr int kMaxTupleSize = 20;

struct DistinctFunctions {
  std::vector<int> first_index;  // distinct -> first original index
  int count() const { return static_cast<int>(first_index.size()); }
};

DistinctFunctions dedupe_functions(const FunctionClass& f) {
  DistinctFunctions d;
  auto cmp = [&f](int a, int b) { return f.functions[a] < f.functions[b]; };
  std::map<int, int, decltype(cmp)> seen(cmp);
  for (int i = 0; i < f.size(); ++i)
    if (seen.try_emplace(i, i).second) d.first_index.push_back(i);
  return d;
}

void check_points(const FunctionClass& f, const std::vector<int>& points) {
  std::vector<bool> dup(f.domain.size, false);
  for (int p : points) {
    if (p < 0 || p >= f.domain.size) throw validation_error("point outside domain");
    if (dup[p]) throw validation_error("duplicate points in tuple");
    dup[p] = true;
  }
}

int flood_log2(int m) {
  int n = 0;
  while ((1 << (n + 1)) <= m && n + 1 <= kMaxTupleSize) ++n;
  return n;
}

/// Domain points grouped by identical value columns across the distinct
/// functions. Only one representative per column can appear in a shattered
/// tuple, and clusters are unions of whole groups.
struct ValueColumns {
  std::vector<std::vector<int>> members;  // group -> points, ascending
  std::vector<Rational> matrix;           // distinct functions x groups
  int groups = 0;
  int functions = 0;

  const Rational& value(int fn, int group) const {
    return matrix[static_cast<std::size_t>(fn) * groups + group];
  }
};

ValueColumns group_columns(const FunctionClass& f, const DistinctFunctions& d) {
  ValueColumns out;
  // hash each point's value column, confirm collisions exactly; group ids
  // are assigned in first-occurrence order, so the result is deterministic
  auto column_equal = [&](int p, int q) {
    for (int j = 0; j < d.count(); ++j)
      if (!rat_eq(f.functions[d.first_index[j]][p], f.functions[d.first_index[j]][q]))
        return false;
    return true;
  };
  std::unordered_map<std::size_t, std::vector<int>> by_hash;  // hash -> group ids
  const int hash_depth = std::min(64, d.count());  // prefix only; equality is exact
  for (int p = 0; p < f.domain.size; ++p) {
    std::size_t acc = 1469598103934665603ull;
    for (int j = 0; j < hash_depth; ++j) {
      const Rational& v = f.functions[d.first_index[j]][p];
      acc = (acc ^ hash_value(numerator(v))) * 1099511628211ull;
      acc = (acc ^ hash_value(denominator(v))) * 1099511628211ull;
    }
    auto& bucket = by_hash[acc];
    bool placed = false;
    for (int gid : bucket) {
      if (column_equal(out.members[gid].front(), p)) {
        out.members[gid].push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(static_cast<int>(out.members.size()));
      out.members.push_back({p});
    }
  }
  out.groups = static_cast<int>(out.members.size());
  out.functions = d.count();
  out.matrix.resize(static_cast<std::size_t>(out.functions) * out.groups);
  for (int j = 0; j < out.functions; ++j)
    for (int g = 0; g < out.groups; ++g)
      out.matrix[static_cast<std::size_t>(j) * out.groups + g] =
          f.functions[d.first_index[j]][out.members[g].front()];
  return out;
}

/// DFS over selector slots with per-point running bounds; an assignment
/// survives while min-over-positives minus max-over-negatives stays > 2 eps
/// at every tuple point, which is exactly the existence condition for a
/// witness level there.
struct FatTupleSearch {
  const ValueColumns* cols = nullptr;
  std::vector<int> tuple;  // group indices
  int n = 0;
  Rational two_eps;
  std::size_t slot_count = 0;
  std::vector<Rational> min_pos;  // (slot_count+1) x n snapshots
  std::vector<Rational> max_neg;
  std::vector<char> used;
  std::vector<int> chosen;

  Rational* mp(std::size_t depth) { return min_pos.data() + depth * n; }
  Rational* mn(std::size_t depth) { return max_neg.data() + depth * n; }

  bool dfs(std::size_t slot) {
    if (slot == slot_count) return true;
    for (int j = 0; j < cols->functions; ++j) {
      if (used[j]) continue;
      Rational* cur_mp = mp(slot);
      Rational* cur_mn = mn(slot);
      Rational* nxt_mp = mp(slot + 1);
      Rational* nxt_mn = mn(slot + 1);
      bool alive = true;
      for (int i = 0; i < n; ++i) {
        const Rational& v = cols->value(j, tuple[i]);
        nxt_mp[i] = cur_mp[i];
        nxt_mn[i] = cur_mn[i];
        if (slot >> i & 1) {
          if (rat_less(v, nxt_mp[i])) nxt_mp[i] = v;
        } else {
          if (rat_greater(v, nxt_mn[i])) nxt_mn[i] = v;
        }
        if (rat_diff_leq(nxt_mp[i], nxt_mn[i], two_eps)) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      used[j] = 1;
      chosen.push_back(j);
      if (dfs(slot + 1)) return true;
      chosen.pop_back();
      used[j] = 0;
    }
    return false;
  }
};

bool fat_tuple_check(const ValueColumns& cols, const std::vector<int>& tuple_groups,
                     const Rational& eps, std::vector<int>* chosen_out,
                     WitnessFunction* witness) {
  FatTupleSearch search;
  search.cols = &cols;
  search.tuple = tuple_groups;
  search.n = static_cast<int>(tuple_groups.size());
  search.two_eps = 2 * eps;
  search.slot_count = std::size_t{1} << search.n;
  search.min_pos.assign((search.slot_count + 1) * search.n, Rational(2));
  search.max_neg.assign((search.slot_count + 1) * search.n, Rational(-1));
  search.used.assign(cols.functions, 0);
  if (!search.dfs(0)) return false;
  if (chosen_out) *chosen_out = search.chosen;
  if (witness) {
    witness->levels.clear();
    const Rational* final_mp = search.mp(search.slot_count);
    const Rational* final_mn = search.mn(search.slot_count);
    for (int i = 0; i < search.n; ++i)
      witness->levels.push_back((final_mp[i] + final_mn[i]) / 2);
  }
  return true;
}

}  // namespace

ShatterCheck fat_shatters(const FunctionClass& f, const std::vector<int>& points,
                          const Rational& eps, const WitnessFunction& h) {
  f.validate();
  if (eps <= 0) throw validation_error("eps must be > 0");
  check_points(f, points);
  const int n = static_cast<int>(points.size());
  if (n > kMaxTupleSize) throw validation_error("tuple too large for exact shattering search");
  if (h.levels.size() != points.size())
    throw validation_error("witness length does not match the tuple");
  for (const auto& level : h.levels)
    if (level < 0 || level > 1) throw validation_error("witness level outside [0,1]");

  std::vector<Rational> above(n), below(n);
  for (int i = 0; i < n; ++i) {
    above[i] = h.levels[i] + eps;
    below[i] = h.levels[i] - eps;
  }
  ShatterCertificate cert;
  cert.n = n;
  cert.selectors.assign(std::size_t{1} << n, -1);
  for (std::size_t B = 0; B < cert.selectors.size(); ++B) {
    int match = -1;
    for (int j = 0; j < f.size() && match < 0; ++j) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const Rational& v = f.functions[j][points[i]];
        ok = (B >> i & 1) ? rat_greater(v, above[i]) : rat_less(v, below[i]);
      }
      if (ok) match = j;
    }
    if (match < 0) return {false, std::nullopt};
    cert.selectors[B] = match;
  }
  cert.witness = h;
  cert.epsilon = eps;
  return {true, std::move(cert)};
}

DimensionResult fat_dimension_search(const FunctionClass& f, const Rational& eps,
                                     std::optional<int> max_n) {
  f.validate();
  if (eps <= 0) throw validation_error("eps must be > 0");
  DimensionResult result;
  auto d = dedupe_functions(f);
  auto cols = group_columns(f, d);

  // a point is 1-shatterable iff the realized value spread exceeds 2 eps
  Rational two_eps = 2 * eps;
  std::vector<int> usable;  // group indices
  for (int g = 0; g < cols.groups; ++g) {
    Rational lo(2), hi(-1);
    for (int j = 0; j < cols.functions; ++j) {
      const Rational& v = cols.value(j, g);
      if (rat_less(v, lo)) lo = v;
      if (rat_greater(v, hi)) hi = v;
    }
    if (!rat_diff_leq(hi, lo, two_eps)) usable.push_back(g);
  }

  int cap = std::min<int>(static_cast<int>(usable.size()), flood_log2(d.count()));
  if (max_n) cap = std::min(cap, *max_n);

  std::vector<std::vector<bool>> compat;
  for (int n = 1; n <= cap; ++n) {
    if (n == 2 && compat.empty()) {
      compat.assign(usable.size(), std::vector<bool>(usable.size(), false));
      for (std::size_t a = 0; a < usable.size(); ++a)
        for (std::size_t b = a + 1; b < usable.size(); ++b) {
          bool ok = fat_tuple_check(cols, {usable[a], usable[b]}, eps, nullptr, nullptr);
          compat[a][b] = compat[b][a] = ok;
        }
    }
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> bool {
      if (static_cast<int>(chosen.size()) == n) {
        std::vector<int> groups;
        groups.reserve(n);
        for (int i : chosen) groups.push_back(usable[i]);
        std::vector<int> picked;
        WitnessFunction witness;
        if (!fat_tuple_check(cols, groups, eps, &picked, &witness)) return false;
        result.dimension = n;
        result.points.clear();
        for (int g : groups) result.points.push_back(cols.members[g].front());
        ShatterCertificate cert;
        cert.n = n;
        for (int j : picked) cert.selectors.push_back(d.first_index[j]);
        cert.witness = std::move(witness);
        cert.epsilon = eps;
        result.certificate = std::move(cert);
        return true;
      }
      for (int i = start;
           static_cast<int>(usable.size()) - i >= n - static_cast<int>(chosen.size()); ++i) {
        bool ok = true;
        for (int j : chosen)
          if (n >= 2 && !compat[j][i]) {
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
    if (!rec(rec, 0)) {
      result.capped = false;
      return result;
    }
  }
  result.capped = max_n.has_value() && result.dimension == *max_n;
  return result;
}

int fat_dimension(const FunctionClass& f, const Rational& eps) {
  return fat_dimension_search(f, eps).dimension;
}

namespace {

/// Cluster-level search: per (cluster index, column group) running min over
/// positive selectors and max over negative ones. The witness level of a
/// cluster exists iff some h separates enough whole groups at margin eps.
struct ClusterFatSearch {
  const ValueColumns* cols = nullptr;
  const ClusterConstraint* k = nullptr;
  int n = 0;
  std::size_t slot_count = 0;
  Rational eps;
  Rational two_eps;
  std::vector<int> group_weight;      // points per group
  std::vector<int> group_out_weight;  // points outside z per group
  std::vector<Rational> gmin;         // (slot_count+1) x n x groups
  std::vector<Rational> lmax;
  std::vector<char> used;
  std::vector<int> chosen;

  Rational* g(std::size_t depth, int i) {
    return gmin.data() + (depth * n + i) * cols->groups;
  }
  Rational* l(std::size_t depth, int i) {
    return lmax.data() + (depth * n + i) * cols->groups;
  }

  bool viable(std::size_t depth, int i) {
    const Rational* gi = g(depth, i);
    const Rational* li = l(depth, i);
    long long weight = 0, out_weight = 0;
    for (int r = 0; r < cols->groups; ++r) {
      if (!rat_diff_leq(gi[r], li[r], two_eps)) {
        weight += group_weight[r];
        out_weight += group_out_weight[r];
      }
    }
    if (k->min_size && weight < *k->min_size) return false;
    if (k->not_null && out_weight < 1) return false;
    return true;
  }

  /// Exact sweep over the arrangement of the per-group open intervals
  /// (lmax+eps, gmin-eps): cell midpoints are enough because membership is
  /// constant between consecutive endpoints.
  bool leaf_level(int i, Rational* h_out, DomainSet* cluster_out, const Domain& domain) {
    const Rational* gi = g(slot_count, i);
    const Rational* li = l(slot_count, i);
    std::vector<Rational> endpoints;
    for (int r = 0; r < cols->groups; ++r) {
      if (!rat_diff_leq(gi[r], li[r], two_eps)) {
        endpoints.push_back(li[r] + eps);
        endpoints.push_back(gi[r] - eps);
      }
    }
    if (endpoints.empty()) return false;
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    for (std::size_t e = 0; e + 1 < endpoints.size(); ++e) {
      Rational h = (endpoints[e] + endpoints[e + 1]) / 2;
      long long weight = 0, out_weight = 0;
      for (int r = 0; r < cols->groups; ++r) {
        if (li[r] + eps < h && h < gi[r] - eps) {
          weight += group_weight[r];
          out_weight += group_out_weight[r];
        }
      }
      bool ok = true;
      if (k->min_size && weight < *k->min_size) ok = false;
      if (ok && k->not_null && out_weight < 1) ok = false;
      if (!ok) continue;
      *h_out = h;
      DomainSet cluster(domain);
      for (int r = 0; r < cols->groups; ++r)
        if (li[r] + eps < h && h < gi[r] - eps)
          for (int p : cols->members[r]) cluster.set(p);
      *cluster_out = std::move(cluster);
      return true;
    }
    return false;
  }

  bool dfs(std::size_t slot, std::vector<Rational>* h_levels, std::vector<DomainSet>* clusters,
           const Domain& domain) {
    if (slot == slot_count) {
      h_levels->clear();
      clusters->clear();
      for (int i = 0; i < n; ++i) {
        Rational h;
        DomainSet cluster;
        if (!leaf_level(i, &h, &cluster, domain)) return false;
        h_levels->push_back(h);
        clusters->push_back(std::move(cluster));
      }
      return true;
    }
    for (int j = 0; j < cols->functions; ++j) {
      if (used[j]) continue;
      bool alive = true;
      for (int i = 0; i < n && alive; ++i) {
        const Rational* cg = g(slot, i);
        const Rational* cl = l(slot, i);
        Rational* ng = g(slot + 1, i);
        Rational* nl = l(slot + 1, i);
        if (slot >> i & 1) {
          for (int r = 0; r < cols->groups; ++r) {
            const Rational& v = cols->value(j, r);
            ng[r] = rat_less(v, cg[r]) ? v : cg[r];
            nl[r] = cl[r];
          }
        } else {
          for (int r = 0; r < cols->groups; ++r) {
            const Rational& v = cols->value(j, r);
            ng[r] = cg[r];
            nl[r] = rat_greater(v, cl[r]) ? v : cl[r];
          }
        }
        alive = viable(slot + 1, i);
      }
      if (!alive) continue;
      used[j] = 1;
      chosen.push_back(j);
      if (dfs(slot + 1, h_levels, clusters, domain)) return true;
      chosen.pop_back();
      used[j] = 0;
    }
    return false;
  }
};

}  // namespace

ClusterDimensionResult cluster_fat_dimension(const FunctionClass& f, const Rational& eps,
                                             const ClusterConstraint& k,
                                             std::optional<int> max_n) {
  f.validate();
  if (eps <= 0) throw validation_error("eps must be > 0");
  k.validate(f.domain);
  ClusterDimensionResult result;
  auto d = dedupe_functions(f);
  auto cols = group_columns(f, d);

  DomainSet outside = k.not_null ? k.not_null->z.complement() : DomainSet::full(f.domain);
  const int outside_total = outside.count();

  int cap = flood_log2(d.count());
  if (k.min_size) cap = std::min(cap, f.domain.size / *k.min_size);
  if (k.not_null) cap = std::min(cap, outside_total);
  if (max_n) cap = std::min(cap, *max_n);

  for (int n = 1; n <= cap; ++n) {
    ClusterFatSearch search;
    search.cols = &cols;
    search.k = &k;
    search.n = n;
    search.slot_count = std::size_t{1} << n;
    search.eps = eps;
    search.two_eps = 2 * eps;
    search.group_weight.resize(cols.groups);
    search.group_out_weight.resize(cols.groups);
    for (int r = 0; r < cols.groups; ++r) {
      search.group_weight[r] = static_cast<int>(cols.members[r].size());
      int out = 0;
      for (int p : cols.members[r])
        if (outside.test(p)) ++out;
      search.group_out_weight[r] = out;
    }
    search.gmin.assign((search.slot_count + 1) * n * cols.groups, Rational(2));
    search.lmax.assign((search.slot_count + 1) * n * cols.groups, Rational(-1));
    search.used.assign(cols.functions, 0);

    std::vector<Rational> h_levels;
    std::vector<DomainSet> clusters;
    if (!search.dfs(0, &h_levels, &clusters, f.domain)) return result;

    result.dimension = n;
    ShatterCertificate cert;
    cert.n = n;
    for (int j : search.chosen) cert.selectors.push_back(d.first_index[j]);
    WitnessFunction witness;
    witness.levels = std::move(h_levels);
    cert.witness = std::move(witness);
    cert.epsilon = eps;
    result.certificate = std::move(cert);
    ClusterFamily fam;
    fam.domain = f.domain;
    fam.clusters = std::move(clusters);
    result.clusters = std::move(fam);
  }
  result.capped = max_n.has_value() && result.dimension == *max_n;
  return result;
}

RationalizedWitness rationalize_witness(const FunctionClass& f, const std::vector<int>& points,
                                        const Rational& eps, const ShatterCertificate& cert) {
  f.validate();
  if (eps <= 0) throw validation_error("eps must be > 0");
  check_points(f, points);
  const int n = static_cast<int>(points.size());
  if (n < 1) throw validation_error("rationalize_witness needs a nonempty tuple");
  if (cert.n != n) throw validation_error("certificate does not match the tuple size");
  if (cert.selectors.size() != (std::size_t{1} << n))
    throw validation_error("certificate selector table must have 2^n entries");
  for (int idx : cert.selectors)
    if (idx < 0 || idx >= f.size())
      throw validation_error("certificate selector index outside the class");

  RationalizedWitness out;
  out.eps_prime = Rational(2);  // min over points below
  for (int i = 0; i < n; ++i) {
    Rational big_s(2), small_s(-1);  // S_a = min over positives, s_a = max over negatives
    for (std::size_t B = 0; B < cert.selectors.size(); ++B) {
      const Rational& v = f.functions[cert.selectors[B]][points[i]];
      if (B >> i & 1) {
        if (rat_less(v, big_s)) big_s = v;
      } else {
        if (rat_greater(v, small_s)) small_s = v;
      }
    }
    Rational gap = big_s - small_s;
    if (gap <= 2 * eps)
      throw validation_error("certificate does not witness the claimed shattering");
    Rational eps_i = eps / 2 + gap / 4;                   // strictly inside (eps, gap/2)
    out.witness.levels.push_back((big_s + small_s) / 2);  // midpoint tie-breaking
    if (eps_i < out.eps_prime) out.eps_prime = eps_i;
  }
  return out;
}

}  // namespace pacdim

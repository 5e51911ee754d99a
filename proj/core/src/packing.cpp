#include "pacdim/packing.hpp"

#include <algorithm>

namespace pacdim {

namespace {

constexpr int kExactCliqueLimit = 64;

/// Tomita-style max clique over single-word adjacency: greedy sequential
/// coloring gives the branching order and the pruning bound.
struct CliqueSolver {
  int n = 0;
  std::vector<std::uint64_t> adj;
  int best = 0;
  std::uint64_t best_set = 0;

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  void expand(std::uint64_t cand, std::uint64_t current, int size) {
    std::vector<int> order;
    std::vector<int> colors;
    std::uint64_t rest = cand;
    int color = 0;
    while (rest) {
      ++color;
      std::uint64_t avail = rest;
      while (avail) {
        int v = __builtin_ctzll(avail);
        avail &= ~bit(v);
        avail &= ~adj[v];
        rest &= ~bit(v);
        order.push_back(v);
        colors.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + colors[i] <= best) return;
      int v = order[i];
      std::uint64_t next = cand & adj[v];
      if (!next) {
        if (size + 1 > best) {
          best = size + 1;
          best_set = current | bit(v);
        }
      } else {
        expand(next, current | bit(v), size + 1);
      }
      cand &= ~bit(v);
    }
  }
};

}  // namespace

PackingResult packing_number(const ConceptClass& c, const DiscreteMeasure& mu,
                             const Rational& r) {
  c.validate();
  if (mu.domain() != c.domain) throw validation_error("measure domain mismatch");
  if (r <= 0) throw validation_error("separation radius must be > 0");

  const int m = c.size();
  std::vector<std::vector<bool>> separated(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool apart = symdiff_distance(mu, c.concepts[i], c.concepts[j]) > r;
      separated[i][j] = separated[j][i] = apart;
    }

  PackingResult result;
  // greedy maximal packing; also seeds the exact search
  std::vector<int> greedy;
  for (int i = 0; i < m; ++i) {
    bool ok = true;
    for (int j : greedy)
      if (!separated[i][j]) {
        ok = false;
        break;
      }
    if (ok) greedy.push_back(i);
  }

  if (m > kExactCliqueLimit) {
    result.size = static_cast<int>(greedy.size());
    result.exact = false;
    result.members = std::move(greedy);
    return result;
  }

  CliqueSolver solver;
  solver.n = m;
  solver.adj.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && separated[i][j]) solver.adj[i] |= CliqueSolver::bit(j);
  solver.best = static_cast<int>(greedy.size());
  for (int v : greedy) solver.best_set |= CliqueSolver::bit(v);
  std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (CliqueSolver::bit(m) - 1);
  solver.expand(all, 0, 0);

  result.size = solver.best;
  result.exact = true;
  for (int v = 0; v < m; ++v)
    if (solver.best_set & CliqueSolver::bit(v)) result.members.push_back(v);
  return result;
}

DiscreteMeasure shattered_measure(const ClusterFamily& family) {
  family.validate();
  if (!family.pairwise_disjoint())
    throw validation_error("shattered measure requires pairwise disjoint clusters");
  const int d = static_cast<int>(family.clusters.size());
  std::vector<Rational> weights(family.domain.size, Rational(0));
  for (const auto& cluster : family.clusters) {
    Rational w(1, static_cast<long long>(d) * cluster.count());
    for (int p = cluster.find_first(); p >= 0; p = cluster.find_next(p)) weights[p] = w;
  }
  return DiscreteMeasure(family.domain, std::move(weights));
}

}  // namespace pacdim

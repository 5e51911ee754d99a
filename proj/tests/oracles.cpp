#include "oracles.hpp"

#include <algorithm>

namespace pacdim::oracle {

bool shatters_naive(const ConceptClass& c, const std::vector<int>& points) {
  const int n = static_cast<int>(points.size());
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << n); ++pattern) {
    bool realized = false;
    for (const auto& concept_set : c.concepts) {
      bool match = true;
      for (int i = 0; i < n && match; ++i)
        match = concept_set.test(points[i]) == ((pattern >> i & 1) != 0);
      if (match) {
        realized = true;
        break;
      }
    }
    if (!realized) return false;
  }
  return true;
}

namespace {

template <typename Fn>
bool any_tuple(int domain_size, int n, const Fn& fn) {
  std::vector<int> tuple(n);
  auto rec = [&](auto&& self, int depth, int start) -> bool {
    if (depth == n) return fn(tuple);
    for (int p = start; p < domain_size; ++p) {
      tuple[depth] = p;
      if (self(self, depth + 1, p + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

int vc_dimension_naive(const ConceptClass& c) {
  int best = 0;
  for (int n = 1; n <= c.domain.size; ++n) {
    if (!any_tuple(c.domain.size, n,
                   [&](const std::vector<int>& t) { return shatters_naive(c, t); }))
      break;
    best = n;
  }
  return best;
}

namespace {

bool fat_shattered_with_witness(const FunctionClass& f, const std::vector<int>& points,
                                const Rational& eps, const std::vector<Rational>& h) {
  const int n = static_cast<int>(points.size());
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << n); ++pattern) {
    bool realized = false;
    for (const auto& table : f.functions) {
      bool match = true;
      for (int i = 0; i < n && match; ++i) {
        const Rational& v = table[points[i]];
        match = (pattern >> i & 1) ? v > h[i] + eps : v < h[i] - eps;
      }
      if (match) {
        realized = true;
        break;
      }
    }
    if (!realized) return false;
  }
  return true;
}

std::vector<Rational> witness_grid(const FunctionClass& f, int point, const Rational& eps) {
  std::vector<Rational> values;
  for (const auto& table : f.functions) values.push_back(table[point]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rational> grid;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      grid.push_back((values[a] + values[b]) / 2);
  for (const auto& v : values) {
    Rational up = v + eps, down = v - eps;
    if (up >= 0 && up <= 1) grid.push_back(up);
    if (down >= 0 && down <= 1) grid.push_back(down);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

bool fat_shattered_some_witness(const FunctionClass& f, const std::vector<int>& points,
                                const Rational& eps) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Rational>> grids;
  for (int p : points) grids.push_back(witness_grid(f, p, eps));
  std::vector<Rational> h(n);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return fat_shattered_with_witness(f, points, eps, h);
    for (const auto& level : grids[depth]) {
      h[depth] = level;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

int fat_dimension_grid(const FunctionClass& f, const Rational& eps, int max_n) {
  int best = 0;
  for (int n = 1; n <= std::min(max_n, f.domain.size); ++n) {
    if (!any_tuple(f.domain.size, n, [&](const std::vector<int>& t) {
          return fat_shattered_some_witness(f, t, eps);
        }))
      break;
    best = n;
  }
  return best;
}

int packing_naive(const ConceptClass& c, const DiscreteMeasure& mu, const Rational& r) {
  const int m = c.size();
  int best = 0;
  for (std::size_t subset = 1; subset < (std::size_t{1} << m); ++subset) {
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (subset >> i & 1) members.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < members.size() && ok; ++a)
      for (std::size_t b = a + 1; b < members.size() && ok; ++b)
        ok = symdiff_distance(mu, c.concepts[members[a]], c.concepts[members[b]]) > r;
    if (ok) best = std::max(best, static_cast<int>(members.size()));
  }
  return best;
}

DomainSet random_set(RngStream& rng, const Domain& d) {
  DomainSet s(d);
  for (int p = 0; p < d.size; ++p)
    if (rng.next() & 1) s.set(p);
  return s;
}

ConceptClass random_class(RngStream& rng, int max_domain, int max_concepts) {
  Domain d(1 + static_cast<int>(rng.next() % max_domain));
  int m = 1 + static_cast<int>(rng.next() % max_concepts);
  std::vector<DomainSet> concepts;
  concepts.reserve(m);
  for (int i = 0; i < m; ++i) concepts.push_back(random_set(rng, d));
  return ConceptClass(d, std::move(concepts));
}

DiscreteMeasure random_measure(RngStream& rng, const Domain& d) {
  std::vector<Rational> weights(d.size);
  Rational total(0);
  for (int p = 0; p < d.size; ++p) {
    weights[p] = Rational(rng.next() % 8, 1);
    total += weights[p];
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  for (auto& w : weights) w /= total;
  return DiscreteMeasure(d, std::move(weights));
}

FunctionClass random_function_class(RngStream& rng, int max_domain, int max_functions,
                                    int denominator) {
  Domain d(1 + static_cast<int>(rng.next() % max_domain));
  int m = 1 + static_cast<int>(rng.next() % max_functions);
  FunctionClass f;
  f.domain = d;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> table(d.size);
    for (int p = 0; p < d.size; ++p)
      table[p] = Rational(rng.next() % (denominator + 1), denominator);
    f.functions.push_back(std::move(table));
  }
  return f;
}

}  // namespace pacdim::oracle

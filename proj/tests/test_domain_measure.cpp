#include <doctest.h>

#include "oracles.hpp"
#include "pacdim/measure.hpp"
#include "pacdim/sampling.hpp"

using namespace pacdim;

TEST_CASE("domain set basics") {
  Domain d(10);
  auto s = DomainSet::from_points(d, {1, 4, 9});
  CHECK(s.count() == 3);
  CHECK(s.test(4));
  CHECK_FALSE(s.test(5));
  CHECK(s.points() == std::vector<int>{1, 4, 9});
  CHECK(s.complement().count() == 7);
  CHECK(s.is_subset_of(DomainSet::full(d)));
  CHECK_THROWS_AS(s.test(10), validation_error);
  CHECK_THROWS_AS((void)Domain(0), validation_error);
}

TEST_CASE("lexicographic set order compares sorted point sequences") {
  Domain d(6);
  auto s = [&](std::vector<int> pts) { return DomainSet::from_points(d, pts); };
  CHECK(DomainSet::lex_less(s({0, 2}), s({0, 3})));
  CHECK(DomainSet::lex_less(s({0, 3}), s({1, 2})));
  CHECK(DomainSet::lex_less(s({0}), s({0, 1})));  // prefix first
  CHECK_FALSE(DomainSet::lex_less(s({1}), s({0, 5})));
}

TEST_CASE("symmetric-difference distance on the stated examples") {
  Domain d(4);
  auto mu = DiscreteMeasure::uniform(d);
  auto a = DomainSet::from_points(d, {0, 1});
  auto b = DomainSet::from_points(d, {1, 2});
  CHECK(symdiff_distance(mu, a, b) == Rational(1, 2));
  CHECK(symdiff_distance(mu, a, a) == 0);

  DiscreteMeasure skew(d, {Rational(7, 10), Rational(1, 10), Rational(1, 10), Rational(1, 10)});
  CHECK(symdiff_distance(skew, DomainSet::from_points(d, {0}), DomainSet(d)) == Rational(7, 10));
}

TEST_CASE("symdiff distance is a pseudometric") {
  RngStream rng(11, 0);
  for (int i = 0; i < 60; ++i) {
    Domain d(1 + static_cast<int>(rng.next() % 9));
    auto mu = oracle::random_measure(rng, d);
    auto a = oracle::random_set(rng, d);
    auto b = oracle::random_set(rng, d);
    auto c = oracle::random_set(rng, d);
    auto dab = symdiff_distance(mu, a, b);
    CHECK(dab >= 0);
    CHECK(dab == symdiff_distance(mu, b, a));
    CHECK(dab <= symdiff_distance(mu, a, c) + symdiff_distance(mu, c, b));
  }
}

TEST_CASE("l1 distance and the indicator collapse") {
  Domain d(2);
  auto mu = DiscreteMeasure::uniform(d);
  std::vector<Rational> f{Rational(0), Rational(1)};
  std::vector<Rational> g{Rational(1), Rational(0)};
  CHECK(l1_distance(mu, f, g) == 1);
  CHECK(l1_distance(mu, f, f) == 0);

  RngStream rng(12, 0);
  for (int i = 0; i < 40; ++i) {
    Domain dom(1 + static_cast<int>(rng.next() % 8));
    auto m = oracle::random_measure(rng, dom);
    auto a = oracle::random_set(rng, dom);
    auto b = oracle::random_set(rng, dom);
    ConceptClass cls(dom, {a, b});
    auto ind = indicator_class(cls);
    CHECK(l1_distance(m, ind.functions[0], ind.functions[1]) == symdiff_distance(m, a, b));
  }
}

TEST_CASE("empirical measures") {
  Domain d2(2);
  auto mu = empirical_measure(d2, {0, 0, 1});
  CHECK(mu.weight(0) == Rational(2, 3));
  CHECK(mu.weight(1) == Rational(1, 3));

  Domain d5(5);
  auto point = empirical_measure(d5, {3, 3, 3});
  CHECK(point.weight(3) == 1);

  Domain d4(4);
  CHECK(empirical_measure(d4, {0, 1, 2, 3}).weights() ==
        DiscreteMeasure::uniform(d4).weights());

  CHECK_THROWS_AS(empirical_measure(d4, {}), validation_error);
}

TEST_CASE("empirical weights always sum to one exactly") {
  RngStream rng(13, 0);
  for (int i = 0; i < 30; ++i) {
    Domain d(1 + static_cast<int>(rng.next() % 10));
    int n = 1 + static_cast<int>(rng.next() % 30);
    std::vector<int> pts;
    for (int j = 0; j < n; ++j) pts.push_back(static_cast<int>(rng.next() % d.size));
    auto mu = empirical_measure(d, pts);
    Rational total(0);
    for (const auto& w : mu.weights()) total += w;
    CHECK(total == 1);
  }
}

TEST_CASE("measure invariants are enforced") {
  Domain d(3);
  CHECK_THROWS_AS(DiscreteMeasure(d, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
                  validation_error);
  CHECK_THROWS_AS(DiscreteMeasure(d, {Rational(3, 2), Rational(-1, 2), Rational(0)}),
                  validation_error);
  CHECK_THROWS_AS(DiscreteMeasure(d, {Rational(1)}), validation_error);

  Domain other(4);
  auto mu = DiscreteMeasure::uniform(d);
  CHECK_THROWS_AS(mu.mass(DomainSet(other)), validation_error);
}

TEST_CASE("class validation flags duplicates but keeps them") {
  Domain d(3);
  ConceptClass c(d, {DomainSet::from_points(d, {0}), DomainSet::from_points(d, {0})});
  auto report = c.validation_report();
  CHECK(report.valid);
  REQUIRE(report.warnings.size() == 1);
  CHECK(c.size() == 2);

  FunctionClass f;
  f.domain = d;
  f.functions = {{Rational(1), Rational(0), Rational(2)}};
  CHECK_THROWS_AS(f.validate(), validation_error);
}

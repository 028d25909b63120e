#include <algorithm>
#include <set>

#include "catalg/errors.hpp"
#include "catalg/maps.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catalg;

TEST_SUITE("maps") {
  TEST_CASE("subsets validate their elements") {
    CHECK_NOTHROW(SubsetOfN(3, {1, 3}));
    CHECK_NOTHROW(SubsetOfN(0, {}));
    CHECK_THROWS_AS(SubsetOfN(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetOfN(3, {4}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetOfN(3, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetOfN(3, {2, 2}), std::invalid_argument);
    CHECK(SubsetOfN(3, {1, 3}).to_string() == "{1,3}");
    CHECK(SubsetOfN::empty(2).to_string() == "{}");
    CHECK_FALSE(SubsetOfN(2, {1}) == SubsetOfN(3, {1}));
  }

  TEST_CASE("canonical order is by size then lexicographic") {
    const auto s = all_subsets(3);
    REQUIRE(s.size() == 8);
    CHECK(s[0] == SubsetOfN::empty(3));
    CHECK(s[1] == SubsetOfN(3, {1}));
    CHECK(s[3] == SubsetOfN(3, {3}));
    CHECK(s[4] == SubsetOfN(3, {1, 2}));
    CHECK(s[5] == SubsetOfN(3, {1, 3}));
    CHECK(s[6] == SubsetOfN(3, {2, 3}));
    CHECK(s[7] == SubsetOfN::full(3));
    for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(canonical_less(s[i], s[i + 1]));
  }

  TEST_CASE("morphisms must be total and onto") {
    const SubsetOfN a(3, {1, 2});
    const SubsetOfN b(3, {1, 2});
    CHECK_NOTHROW(Morphism(a, b, {2, 1}));
    CHECK_THROWS_AS(Morphism(a, b, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(a, b, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(a, b, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(a, SubsetOfN(2, {1, 2}), {1, 2}), std::invalid_argument);
  }

  TEST_CASE("order-preserving examples") {
    CHECK(Morphism::identity(SubsetOfN(3, {1, 3})).is_order_preserving());
    CHECK(Morphism(SubsetOfN(2, {1, 2}), SubsetOfN(2, {1}), {1, 1}).is_order_preserving());
    CHECK_FALSE(Morphism(SubsetOfN(2, {1, 2}), SubsetOfN(2, {1, 2}), {2, 1}).is_order_preserving());
  }

  TEST_CASE("order-decreasing examples") {
    for (const auto& a : all_subsets(3)) CHECK(Morphism::identity(a).is_order_decreasing());
    CHECK(Morphism(SubsetOfN(2, {2}), SubsetOfN(2, {1}), {1}).is_order_decreasing());
    CHECK_FALSE(Morphism(SubsetOfN(2, {1, 2}), SubsetOfN(2, {1, 2}), {2, 1}).is_order_decreasing());
  }

  TEST_CASE("composition examples") {
    const Morphism f(SubsetOfN(3, {1, 2, 3}), SubsetOfN(3, {1, 2}), {1, 1, 2});
    CHECK(compose(Morphism::identity(f.cod()), f) == f);
    CHECK(compose(f, Morphism::identity(f.dom())) == f);
    const Morphism g(SubsetOfN(3, {1, 2}), SubsetOfN(3, {1}), {1, 1});
    const auto h = compose(g, f);
    CHECK(h == Morphism(SubsetOfN(3, {1, 2, 3}), SubsetOfN(3, {1}), {1, 1, 1}));
    const auto one = Morphism::identity(SubsetOfN(2, {1}));
    const auto two = Morphism::identity(SubsetOfN(2, {2}));
    CHECK_THROWS_AS(compose(two, one), EndpointMismatch);
  }

  TEST_CASE("composition is associative on every composable triple, n <= 3") {
    for (int n = 0; n <= 3; ++n) {
      std::vector<Morphism> all;
      for (const auto& a : all_subsets(n)) {
        for (const auto& b : all_subsets(n)) {
          for (const auto& t : oracle::hom(Family::PF, a, b)) all.emplace_back(a, b, t);
          for (const auto& t : oracle::hom(Family::PO, a, b)) all.emplace_back(a, b, t);
        }
      }
      std::size_t triples = 0;
      for (const auto& f : all) {
        for (const auto& g : all) {
          if (!(f.cod() == g.dom())) continue;
          for (const auto& h : all) {
            if (!(g.cod() == h.dom())) continue;
            CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
            ++triples;
          }
        }
      }
      CHECK(triples > 0);
    }
  }

  TEST_CASE("composition keeps the family predicates") {
    for (auto fam : {Family::PO, Family::PF, Family::PC}) {
      const auto all = enumerate_monoid({fam, 3});
      for (const auto& f : all) {
        for (const auto& g : all) {
          if (f.cod() == g.dom()) CHECK(satisfies(fam, compose(g, f)));
        }
      }
    }
  }

  TEST_CASE("factor_through recovers the left factor") {
    const auto all = enumerate_monoid({Family::PF, 3});
    for (const auto& f : all) {
      for (const auto& g : all) {
        if (!(f.cod() == g.dom())) continue;
        const auto m = compose(g, f);
        const auto back = factor_through(m, f);
        REQUIRE(back.has_value());
        CHECK(*back == g);
      }
    }
    const Morphism f(SubsetOfN(2, {1, 2}), SubsetOfN(2, {1, 2}), {1, 2});
    const Morphism m(SubsetOfN(2, {1, 2}), SubsetOfN(2, {1}), {1, 1});
    const Morphism swap(SubsetOfN(2, {1, 2}), SubsetOfN(2, {1, 2}), {2, 1});
    CHECK(factor_through(m, f).has_value());
    CHECK_FALSE(factor_through(f, m).has_value());
    CHECK(*factor_through(f, swap) == swap);
  }

  TEST_CASE("hom-set examples") {
    const auto eo = enumerate_hom(Family::PO, SubsetOfN(3, {1, 2, 3}), SubsetOfN(3, {1, 2}));
    CHECK(eo.size() == 2);
    const auto ec = enumerate_hom(Family::PC, SubsetOfN(2, {1, 2}), SubsetOfN(2, {1, 2}));
    REQUIRE(ec.size() == 1);
    CHECK(ec[0].is_identity());
    const auto ef = enumerate_hom(Family::PF, SubsetOfN(3, {2, 3}), SubsetOfN(3, {1, 2}));
    REQUIRE(ef.size() == 2);
    CHECK(ef[0].values() == std::vector<int>{1, 2});
    CHECK(ef[1].values() == std::vector<int>{2, 1});
    CHECK(enumerate_hom(Family::PO, SubsetOfN::empty(2), SubsetOfN::empty(2)).size() == 1);
    CHECK(enumerate_hom(Family::PO, SubsetOfN(2, {1}), SubsetOfN::empty(2)).empty());
    CHECK(enumerate_hom(Family::PO, SubsetOfN::empty(2), SubsetOfN(2, {1})).empty());
  }

  TEST_CASE("hom-sets match brute force and are sorted, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
      for (auto fam : {Family::PO, Family::PF, Family::PC}) {
        for (const auto& a : all_subsets(n)) {
          for (const auto& b : all_subsets(n)) {
            const auto got = enumerate_hom(fam, a, b);
            auto want = oracle::hom(fam, a, b);
            std::sort(want.begin(), want.end());
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].values() == want[i]);
          }
        }
      }
    }
  }

  TEST_CASE("order-preserving hom-set sizes are binomial, n <= 6") {
    auto binom = [](int a, int b) {
      if (a == -1 && b == -1) return 1L;
      if (b < 0 || b > a) return 0L;
      long r = 1;
      for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
      return r;
    };
    for (int n = 0; n <= 6; ++n) {
      for (const auto& a : all_subsets(n)) {
        for (const auto& b : all_subsets(n)) {
          const auto size = static_cast<long>(enumerate_hom(Family::PO, a, b).size());
          CHECK(size == binom(a.size() - 1, b.size() - 1));
        }
      }
    }
  }

  TEST_CASE("monoid sizes") {
    CHECK(enumerate_monoid({Family::PO, 1}).size() == 2);
    CHECK(enumerate_monoid({Family::PO, 2}).size() == 8);
    CHECK(enumerate_monoid({Family::PF, 4}).size() == 120);
    // Independent partial-map counts, frozen.
    const std::size_t po[] = {1, 2, 8, 38, 192, 1002};
    const std::size_t pf[] = {1, 2, 6, 24, 120, 720};
    const std::size_t pc[] = {1, 2, 6, 22, 90, 394};
    for (int n = 0; n <= 5; ++n) {
      CHECK(enumerate_monoid({Family::PO, n}).size() == po[n]);
      CHECK(enumerate_monoid({Family::PF, n}).size() == pf[n]);
      CHECK(enumerate_monoid({Family::PC, n}).size() == pc[n]);
    }
    CHECK_THROWS_AS(enumerate_monoid({Family::PO, 9}), ResourceLimit);
    CHECK_THROWS_AS(enumerate_monoid({Family::PO, 4}, 3), ResourceLimit);
  }

  TEST_CASE("partial maps correspond one-to-one with the monoid, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
      for (auto fam : {Family::PO, Family::PF, Family::PC}) {
        const auto monoid = enumerate_monoid({fam, n});
        std::set<std::vector<int>> seen;
        std::size_t matching = 0;
        PartialMap p(static_cast<std::size_t>(n), 0);
        while (true) {
          const auto m = corestrict(n, p);
          if (satisfies(fam, m)) {
            ++matching;
            CHECK(std::find(monoid.begin(), monoid.end(), m) != monoid.end());
            seen.insert(p);
          }
          std::size_t pos = 0;
          while (pos < p.size() && p[pos] == n) p[pos++] = 0;
          if (pos == p.size()) break;
          ++p[pos];
        }
        CHECK(matching == monoid.size());
        CHECK(oracle::partial_maps(fam, n) == monoid.size());
      }
    }
  }

  TEST_CASE("family names parse case-insensitively") {
    CHECK(parse_family("po") == Family::PO);
    CHECK(parse_family("PF") == Family::PF);
    CHECK(parse_family("Pc") == Family::PC);
    CHECK_THROWS_AS(parse_family("px"), std::invalid_argument);
    CHECK(to_string(Family::PC) == "pc");
  }

  TEST_CASE("random morphisms agree with the predicates computed from tables") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + trial % 6;
      const auto a = oracle::random_subset(rng, n);
      const auto b = oracle::random_subset(rng, n);
      const auto maps = oracle::total_maps(a.elements(), b.elements());
      for (const auto& t : maps) {
        if (!oracle::onto(t, b.elements())) continue;
        const Morphism m(a, b, t);
        CHECK(m.is_order_preserving() == oracle::preserves_order(a.elements(), t));
        CHECK(m.is_order_decreasing() == oracle::decreasing(a.elements(), t));
        CHECK(m.values() == t);
      }
    }
  }
}

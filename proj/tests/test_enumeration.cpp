#include <random>

#include "catalg/categories.hpp"
#include "catalg/enumeration.hpp"
#include "catalg/errors.hpp"
#include "catalg/invariants.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catalg;

namespace {

std::size_t ec_hom(const SubsetOfN& a, const SubsetOfN& b) { return oracle::hom(Family::PC, a, b).size(); }

LatticePath path(std::vector<int> v) { return LatticePath(std::move(v)); }

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("binomial convention") {
    CHECK(binomial(-1, -1) == 1);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
  }

  TEST_CASE("onto order-preserving counts") {
    CHECK(count_onto_op(3, 2) == 2);
    CHECK(count_onto_op(0, 0) == 1);
    CHECK(count_onto_op(5, 3) == 6);
    CHECK(count_onto_op(3, 0) == 0);
    CHECK(count_onto_op(0, 2) == 0);
    for (int m = 0; m <= 6; ++m) {
      for (int l = 0; l <= 6; ++l) {
        const auto a = SubsetOfN::initial(6, m);
        const auto b = SubsetOfN::initial(6, l);
        CHECK(count_onto_op(m, l) == oracle::hom(Family::PO, a, b).size());
      }
    }
  }

  TEST_CASE("Pascal Cartan matrix") {
    ExactMatrix want(3, 3);
    want(0, 0) = 1;
    want(1, 1) = 1;
    want(1, 2) = 1;
    want(2, 2) = 1;
    CHECK(cartan_po_closed(2) == want);
    CHECK(cartan_po_closed(4)(2, 4) == 3);
    CHECK(cartan_po_closed(0)(0, 0) == 1);
    for (int n = 0; n <= 6; ++n) CHECK(cartan_po_closed(n) == cartan_matrix(build_skeleton_seo(n)));
  }

  TEST_CASE("radical dimensions of the order-preserving family") {
    CHECK(dim_rad_po(2, 1) == 2);
    CHECK(dim_rad_po(3, 3) == 0);
    CHECK(dim_rad_po(4, 1) == radical_dimension(build_category(CategoryKind::EO, 4), 1));
    CHECK_THROWS_AS(dim_rad_po(3, 0), std::invalid_argument);
    for (int n = 1; n <= 6; ++n) {
      const auto eo = build_category(CategoryKind::EO, n);
      for (int k = 1; k <= n; ++k) {
        BigInt by_defect = 0;
        for (std::size_t m = 0; m < eo.morphism_count(); ++m) by_defect += defect(eo.morphism(m)) >= k ? 1 : 0;
        CHECK(dim_rad_po(n, k) == by_defect);
      }
    }
  }

  TEST_CASE("bar boundaries") {
    CHECK(bar_path(8, SubsetOfN(8, {1, 3, 4, 5, 8})).bar.steps() == std::vector<int>{1, 1, 2, 3, 4, 4, 4, 5});
    CHECK(bar_path(4, SubsetOfN::empty(4)).bar.steps() == std::vector<int>{1, 1, 1, 1});
    CHECK(bar_path(4, SubsetOfN::full(4)).bar.steps() == std::vector<int>{1, 2, 3, 4});
    CHECK(bar_path(0, SubsetOfN::empty(0)).bar.length() == 0);
    CHECK_THROWS_AS(bar_path(3, SubsetOfN::empty(4)), std::invalid_argument);
  }

  TEST_CASE("bar boundaries ascend exactly at members above 1") {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& b : all_subsets(n)) {
        const auto bar = bar_path(n, b).bar;
        CHECK(bar[0] == 1);
        for (int i = 2; i <= n; ++i) {
          const int step = bar[static_cast<std::size_t>(i - 1)] - bar[static_cast<std::size_t>(i - 2)];
          CHECK(step == (b.contains(i) ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("lattice paths validate") {
    CHECK_NOTHROW(path({1, 1, 2}));
    CHECK_THROWS_AS(path({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(path({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(path({1, 4}), std::invalid_argument);
    CHECK(path({1, 1, 2}).below(path({1, 2, 2})));
    CHECK_FALSE(path({1, 2, 2}).below(path({1, 1, 3})));
  }

  TEST_CASE("path counting examples") {
    CHECK(paths_below_det(path({1, 1, 1, 1})) == 1);
    CHECK(paths_below_det(path({1, 2, 3})) == 5);
    CHECK(paths_below_det(path({1, 1, 2, 3, 4, 4, 4, 5})) == paths_below_dp(path({1, 1, 2, 3, 4, 4, 4, 5})));
    CHECK(paths_below_dp(path({1, 1, 2, 3, 4, 4, 4, 5})) == 123);
    CHECK(paths_below_dp(path({1})) == 1);
    CHECK(paths_below_dp(path({1, 2})) == 2);
    CHECK(paths_below_dp(path({1, 2, 3, 4})) == 14);
    CHECK(paths_below_det(path({})) == 1);
    CHECK(paths_below_dp(path({})) == 1);
  }

  TEST_CASE("path matrix entries") {
    const auto m = path_matrix(path({1, 2, 3}));
    CHECK(m(0, 0) == 1);  // C(1,1)
    CHECK(m(0, 1) == 0);  // C(1,2)
    CHECK(m(1, 0) == 1);  // C(2,0)
    CHECK(m(2, 0) == 0);  // C(3,-1)
    CHECK(m(2, 2) == 3);  // C(3,1)
  }

  TEST_CASE("determinant, DP and listing agree on random boundaries") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
      const int length = 1 + trial % 8;
      const auto x = oracle::random_boundary(rng, length);
      const LatticePath p(x);
      const BigInt listed(std::to_string(oracle::paths_below(x)));
      CHECK(paths_below_dp(p) == listed);
      CHECK(paths_below_det(p) == listed);
    }
  }

  TEST_CASE("order-preserving decreasing total maps") {
    CHECK(count_C(3, SubsetOfN::full(3)) == 5);
    CHECK(count_C(2, SubsetOfN(2, {1})) == 1);
    CHECK(count_C(3, SubsetOfN(3, {1, 2})) == 3);
    CHECK(count_C(3, SubsetOfN(3, {2, 3})) == 0);
    CHECK(count_C(0, SubsetOfN::empty(0)) == 1);
    for (int n = 0; n <= 5; ++n) {
      for (const auto& b : all_subsets(n)) CHECK(count_C(n, b) == oracle::monotone_decreasing_total(n, b));
      std::vector<int> diag;
      for (int i = 1; i <= n; ++i) diag.push_back(i);
      CHECK(count_C(n, SubsetOfN::full(n)) == paths_below_dp(LatticePath(diag)));
    }
  }

  TEST_CASE("onto counts by inclusion-exclusion") {
    CHECK(count_EC_full(2, SubsetOfN(2, {1})) == 1);
    CHECK(count_EC_full(3, SubsetOfN(3, {1, 2})) == 2);
    for (int n = 1; n <= 5; ++n) CHECK(count_EC_full(n, SubsetOfN::empty(n)) == 0);
    for (int n = 0; n <= 5; ++n) {
      for (const auto& b : all_subsets(n)) CHECK(count_EC_full(n, b) == ec_hom(SubsetOfN::full(n), b));
    }
  }

  TEST_CASE("domain reduction") {
    CHECK(reduce_domain(SubsetOfN(3, {2, 3}), SubsetOfN(3, {1, 3})) == SubsetOfN(3, {1, 3}));
    CHECK(reduce_domain(SubsetOfN(4, {1, 2, 4}), SubsetOfN(4, {1, 2})) == SubsetOfN(4, {1, 2, 4}));
    CHECK_THROWS_AS(reduce_domain(SubsetOfN(3, {1, 2}), SubsetOfN(3, {3})), Infeasible);
    const auto steps = reduce_domain_steps(SubsetOfN(3, {2, 3}), SubsetOfN(3, {1, 3}));
    REQUIRE(steps.size() == 3);
    CHECK(steps[1] == SubsetOfN(3, {1, 3}));
  }

  TEST_CASE("domain reduction keeps the count at every step, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& a : all_subsets(n)) {
        for (const auto& b : all_subsets(n)) {
          if (a.size() < b.size()) continue;
          const auto target = ec_hom(a, b);
          try {
            const auto steps = reduce_domain_steps(a, b);
            for (const auto& s : steps) {
              CHECK(s.size() == a.size());
              CHECK(ec_hom(s, b) == target);
            }
            CHECK(b.is_subset_of(steps.back()));
          } catch (const Infeasible&) {
            CHECK(target == 0);
          }
        }
      }
    }
  }

  TEST_CASE("renaming to an initial segment") {
    const auto [m, renamed] = rename_to_initial(SubsetOfN(3, {1, 3}), SubsetOfN(3, {1, 3}));
    CHECK(m == 2);
    CHECK(renamed == SubsetOfN(2, {1, 2}));
    const auto [m2, same] = rename_to_initial(SubsetOfN::full(4), SubsetOfN(4, {1, 3}));
    CHECK(m2 == 4);
    CHECK(same == SubsetOfN(4, {1, 3}));
    CHECK_THROWS_AS(rename_to_initial(SubsetOfN(3, {1}), SubsetOfN(3, {2})), std::invalid_argument);
    for (const auto& ap : all_subsets(4)) {
      for (const auto& b : all_subsets(4)) {
        if (!b.is_subset_of(ap)) continue;
        const auto [k, r] = rename_to_initial(ap, b);
        CHECK(ec_hom(ap, b) == ec_hom(SubsetOfN::full(k), r));
      }
    }
  }

  TEST_CASE("EC Cartan entries") {
    for (const auto& a : all_subsets(3)) CHECK(cartan_entry_ec(a, a) == 1);
    CHECK(cartan_entry_ec(SubsetOfN(3, {1, 2, 3}), SubsetOfN(3, {1, 2})) == 2);
    for (int n = 0; n <= 4; ++n) {
      for (const auto& a : all_subsets(n)) {
        for (const auto& b : all_subsets(n)) CHECK(cartan_entry_ec(a, b) == ec_hom(a, b));
      }
    }
  }

  TEST_CASE("order-decreasing product formula") {
    CHECK(count_decreasing(SubsetOfN::empty(3), SubsetOfN(3, {1})) == 1);
    CHECK(count_decreasing(SubsetOfN(3, {2, 3}), SubsetOfN(3, {1, 2})) == 4);
    CHECK(count_decreasing(SubsetOfN(3, {1}), SubsetOfN(3, {2})) == 0);
  }

  TEST_CASE("EF Cartan entries") {
    CHECK(cartan_entry_ef(SubsetOfN(3, {2, 3}), SubsetOfN(3, {1, 2})) == 2);
    for (const auto& a : all_subsets(3)) CHECK(cartan_entry_ef(a, a) == 1);
    for (int n = 0; n <= 4; ++n) {
      for (const auto& a : all_subsets(n)) {
        for (const auto& b : all_subsets(n)) {
          CHECK(cartan_entry_ef(a, b) == oracle::hom(Family::PF, a, b).size());
        }
      }
    }
  }

  TEST_CASE("closed Cartan matrices equal counted ones, parallel and serial, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
      const auto ec = cartan_matrix(build_category(CategoryKind::EC, n));
      const auto ef = cartan_matrix(build_category(CategoryKind::EF, n));
      CHECK(cartan_ec_closed(n) == ec);
      CHECK(cartan_ef_closed(n) == ef);
      CHECK(serial::cartan_ec_closed(n) == ec);
      CHECK(serial::cartan_ef_closed(n) == ef);
    }
  }

  TEST_CASE("order-decreasing monoid has factorial size") {
    for (int n = 0; n <= 6; ++n) {
      BigInt f = 1;
      for (int i = 2; i <= n + 1; ++i) f *= i;
      CHECK(pf_monoid_size(n) == f);
      CHECK(pf_monoid_size(n) == oracle::partial_maps(Family::PF, n));
    }
  }

  TEST_CASE("exact determinant") {
    ExactMatrix m(3, 3);
    int v[3][3] = {{0, 2, 1}, {3, 1, 4}, {5, 9, 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v[i][j];
    // Cofactor expansion along the first row.
    const long want = 0 * (1 * 2 - 4 * 9) - 2 * (3 * 2 - 4 * 5) + 1 * (3 * 9 - 1 * 5);
    CHECK(m.determinant() == want);
    CHECK(ExactMatrix(0, 0).determinant() == 1);
    CHECK_THROWS_AS(ExactMatrix(2, 3).determinant(), std::invalid_argument);
    ExactMatrix singular(2, 2);
    singular(0, 0) = 2;
    singular(0, 1) = 4;
    singular(1, 0) = 1;
    singular(1, 1) = 2;
    CHECK(singular.determinant() == 0);
  }
}

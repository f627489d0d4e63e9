#include <doctest.h>

#include "arq/classify.hpp"

using namespace arq;

TEST_CASE("table: A family") {
  DynkinTree a5 = build_tree(Family::A, 5);
  SlicedAutomorphism tau5 = translation(a5);
  CHECK(standard_by_table(a5, tau5));
  CHECK(standard_by_table(a5, power(tau5, 2)));
  CHECK(standard_by_table(a5, power(tau5, -3)));
  // phi tau^r: threshold r >= (n-1)/2 = 2
  CHECK(standard_by_table(a5, parse_automorphism(a5, "phi*tau^2")));
  CHECK_FALSE(standard_by_table(a5, parse_automorphism(a5, "phi*tau")));

  DynkinTree a4 = build_tree(Family::A, 4);
  SlicedAutomorphism rho = parse_automorphism(a4, "rho");
  CHECK(standard_by_table(a4, power(rho, 3)));
  CHECK_FALSE(standard_by_table(a4, rho));
  // even powers of rho generate a tau-group: cylindric, always standard
  CHECK(standard_by_table(a4, power(rho, 2)));
  CHECK(standard_by_table(a4, power(translation(a4), 1)));
}

TEST_CASE("table: D and E families") {
  DynkinTree d5 = build_tree(Family::D, 5);
  CHECK(standard_by_table(d5, power(translation(d5), 3)));
  CHECK_FALSE(standard_by_table(d5, power(translation(d5), 2)));
  CHECK(standard_by_table(d5, parse_automorphism(d5, "phi*tau^3")));

  DynkinTree d4 = build_tree(Family::D, 4);
  CHECK(standard_by_table(d4, parse_automorphism(d4, "phi(123)*tau^2")));
  CHECK_FALSE(standard_by_table(d4, parse_automorphism(d4, "phi(123)*tau")));
  CHECK(standard_by_table(d4, power(translation(d4), 2)));

  DynkinTree e6 = build_tree(Family::E, 6);
  CHECK(standard_by_table(e6, power(translation(e6), 5)));
  CHECK_FALSE(standard_by_table(e6, power(translation(e6), 4)));
  CHECK(standard_by_table(e6, parse_automorphism(e6, "phi*tau^5")));

  DynkinTree e8 = build_tree(Family::E, 8);
  CHECK(standard_by_table(e8, power(translation(e8), 14)));
  CHECK_FALSE(standard_by_table(e8, power(translation(e8), 13)));
}

TEST_CASE("table errors") {
  DynkinTree a3 = build_tree(Family::A, 3);
  CHECK_THROWS_AS(standard_by_table(a3, SlicedAutomorphism::identity(a3)),
                  Error);
  try {
    standard_by_table(a3, suspension(build_tree(Family::A, 4)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TreeMismatch);
  }
  DynkinTree l2 = build_tree(Family::L, 2);
  CHECK_THROWS_AS(standard_by_table(l2, translation(l2)), Error);
}

TEST_CASE("table recognizes groups, not spellings") {
  DynkinTree a3 = build_tree(Family::A, 3);
  // <S> equals <phi*tau^2>, and r = 2 clears the (n-1)/2 threshold
  CHECK(standard_by_table(a3, suspension(a3)));
}

TEST_CASE("hom condition matches the table thresholds") {
  DynkinTree e7 = build_tree(Family::E, 7);
  auto [ok8, checks8] = standard_by_hom_condition(e7, power(translation(e7), 8));
  CHECK(ok8);
  for (const auto& c : checks8) {
    CHECK(c.self_dim == 1);
    CHECK(c.other_sum == 0);
  }
  auto [ok7, checks7] = standard_by_hom_condition(e7, power(translation(e7), 7));
  CHECK_FALSE(ok7);

  DynkinTree a3 = build_tree(Family::A, 3);
  auto [okA, checksA] = standard_by_hom_condition(a3, translation(a3));
  CHECK(okA);
}

TEST_CASE("vertex count criterion") {
  DynkinTree a3 = build_tree(Family::A, 3);
  // |ZA_3 / tau^2| = 6 = number of positive roots: not strictly more
  CHECK_FALSE(vertex_count_criterion(a3, power(translation(a3), 2)));
  CHECK(vertex_count_criterion(a3, power(translation(a3), 3)));
}

TEST_CASE("Calabi-Yau dimension") {
  DynkinTree a3 = build_tree(Family::A, 3);
  SlicedAutomorphism cluster =
      compose(translation(a3).inverse(), suspension(a3));
  CHECK(cy_dimension(a3, cluster, 24) == 2);
  CHECK(cy_dimension(a3, power(translation(a3), 3), 1) == std::nullopt);
  for (auto [fam, rank] :
       {std::pair{Family::A, 2}, {Family::D, 4}, {Family::E, 6}}) {
    DynkinTree t = build_tree(fam, rank);
    CHECK(cy_dimension(t, translation(t), 24) == 1);
  }
  DynkinTree e8 = build_tree(Family::E, 8);
  CHECK(cy_dimension(e8, power(translation(e8), 14), 24) == 14);
}

TEST_CASE("maximal CY generator") {
  DynkinTree d4 = build_tree(Family::D, 4);
  CHECK(maximal_cy_generator(d4, 3) == power(translation(d4), -7));
  DynkinTree a3 = build_tree(Family::A, 3);
  for (long d = 2; d <= 4; ++d) {
    SlicedAutomorphism g = maximal_cy_generator(a3, d);
    CHECK(is_weakly_admissible(g));
    auto cy = cy_dimension(a3, g, 24);
    REQUIRE(cy.has_value());
    CHECK(*cy <= d);
  }
  try {
    maximal_cy_generator(a3, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DOutOfRange);
  }
}

#include <doctest.h>

#include <algorithm>

#include "arq/zquiver.hpp"

using namespace arq;

TEST_CASE("repetition quiver neighborhoods") {
  DynkinTree a2 = build_tree(Family::A, 2);
  CHECK(successors(a2, {0, 1}) == std::vector<ZVertex>{{0, 2}});
  CHECK(predecessors(a2, {0, 1}) == std::vector<ZVertex>{{-1, 2}});
  CHECK(successors(a2, {0, 2}) == std::vector<ZVertex>{{1, 1}});

  DynkinTree a1 = build_tree(Family::A, 1);
  CHECK(successors(a1, {5, 1}).empty());
  CHECK(predecessors(a1, {5, 1}).empty());

  DynkinTree d4 = build_tree(Family::D, 4);
  auto succ = successors(d4, {0, 2});
  std::sort(succ.begin(), succ.end());
  CHECK(succ == std::vector<ZVertex>{{1, 1}, {1, 3}, {1, 4}});
  auto pred = predecessors(d4, {0, 2});
  std::sort(pred.begin(), pred.end());
  CHECK(pred == std::vector<ZVertex>{{0, 1}, {0, 3}, {0, 4}});

  CHECK_THROWS_AS(successors(a2, {0, 7}), Error);
}

TEST_CASE("mesh consistency: pred(succ) closes up") {
  DynkinTree e6 = build_tree(Family::E, 6);
  for (int q : e6.vertices) {
    ZVertex v{0, q};
    for (ZVertex s : successors(e6, v)) {
      auto back = predecessors(e6, s);
      CHECK(std::count(back.begin(), back.end(), v) == 1);
    }
  }
}

TEST_CASE("tau^r quotient has r * n vertices") {
  for (auto [fam, rank] :
       {std::pair{Family::A, 4}, {Family::D, 5}, {Family::E, 6}}) {
    DynkinTree t = build_tree(fam, rank);
    for (int r = 1; r <= 3; ++r) {
      OrbitQuiver q = orbit_quotient(t, power(translation(t), r));
      CHECK(static_cast<int>(q.vertices.size()) == r * rank);
      CHECK(validate_translation_quiver(q.raw()).empty());
    }
  }
}

TEST_CASE("cluster quotient of A_2 has 5 vertices") {
  DynkinTree a2 = build_tree(Family::A, 2);
  SlicedAutomorphism g = compose(translation(a2).inverse(), suspension(a2));
  OrbitQuiver q = orbit_quotient(a2, g);
  CHECK(q.vertices.size() == 5);
  CHECK(validate_translation_quiver(q.raw()).empty());
  // tau acts as a 5-cycle
  std::vector<bool> hit(5, false);
  int i = 0;
  for (int step = 0; step < 5; ++step) {
    hit[i] = true;
    i = q.tau[i];
  }
  CHECK(std::count(hit.begin(), hit.end(), true) == 5);
}

TEST_CASE("rho quotient of A_2 is a one vertex loop") {
  DynkinTree a2 = build_tree(Family::A, 2);
  OrbitQuiver q = orbit_quotient(a2, parse_automorphism(a2, "rho"));
  REQUIRE(q.vertices.size() == 1);
  REQUIRE(q.arrows.size() == 1);
  CHECK(q.arrows[0] == ValuedArrow{0, 0, 1});
  CHECK(q.tau == std::vector<int>{0});
  CHECK(validate_translation_quiver(q.raw()).empty());
}

TEST_CASE("quotient errors") {
  DynkinTree a3 = build_tree(Family::A, 3);
  CHECK_THROWS_AS(orbit_quotient(a3, tree_automorphism(
                                         a3, std::vector<int>{0, 3, 2, 1})),
                  Error);  // zero net shift: infinite quotient or not w.a.
  DynkinTree a4 = build_tree(Family::A, 4);
  try {
    orbit_quotient(a3, translation(a4));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TreeMismatch);
  }
}

TEST_CASE("validation reports specific violations") {
  // ZA_2 / tau: two vertices, tau trivial on orbits
  RawTranslationQuiver good{2, {{0, 1, 1}, {1, 0, 1}}, {0, 1}};
  CHECK(validate_translation_quiver(good).empty());

  RawTranslationQuiver bad_tau{2, {{0, 1, 1}, {1, 0, 1}}, {0, 0}};
  CHECK_FALSE(validate_translation_quiver(bad_tau).empty());

  RawTranslationQuiver bad_val{2, {{0, 1, 0}, {1, 0, 1}}, {0, 1}};
  CHECK_FALSE(validate_translation_quiver(bad_val).empty());

  // translation law broken: arrow into 1 but no matching arrow out of tau(1)
  RawTranslationQuiver bad_mesh{3, {{0, 1, 1}, {1, 2, 1}}, {1, 2, 0}};
  CHECK_FALSE(validate_translation_quiver(bad_mesh).empty());

  // loop at a vertex not fixed by tau
  RawTranslationQuiver bad_loop{2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}}, {1, 0}};
  CHECK_FALSE(validate_translation_quiver(bad_loop).empty());
}

TEST_CASE("isomorphism testing") {
  DynkinTree a3 = build_tree(Family::A, 3);
  RawTranslationQuiver q1 = orbit_quotient(a3, power(translation(a3), 2)).raw();
  RawTranslationQuiver q2 = q1;
  // relabel vertices by a rotation
  int n = q2.n;
  auto rel = [&](int v) { return (v + 1) % n; };
  for (auto& a : q2.arrows) {
    a.src = rel(a.src);
    a.dst = rel(a.dst);
  }
  std::vector<int> tau(n);
  for (int v = 0; v < n; ++v) tau[rel(v)] = rel(q1.tau[v]);
  q2.tau = tau;
  CHECK(translation_quiver_isomorphic(q1, q2));

  RawTranslationQuiver q3 =
      orbit_quotient(a3, parse_automorphism(a3, "phi*tau^2")).raw();
  CHECK_FALSE(translation_quiver_isomorphic(q1, q3));
}

TEST_CASE("identify_type round trips") {
  for (auto [fam, rank] :
       {std::pair{Family::A, 2}, {Family::A, 4}, {Family::D, 4}}) {
    DynkinTree t = build_tree(fam, rank);
    for (const auto& g : enumerate_weakly_admissible(t, 2)) {
      OrbitQuiver q = orbit_quotient(t, g);
      auto [t2, g2] = identify_type(q.raw());
      CHECK(t2.same_shape(t));
      CHECK(translation_quiver_isomorphic(q.raw(),
                                          orbit_quotient(t2, g2).raw()));
    }
  }
}

TEST_CASE("identify_type on a bare loop gives (A_2, rho)") {
  RawTranslationQuiver loop{1, {{0, 0, 1}}, {0}};
  auto [t, g] = identify_type(loop);
  CHECK(t.family == Family::A);
  CHECK(t.rank == 2);
  CHECK(conjugacy_equal(g, parse_automorphism(t, "rho")));
}

TEST_CASE("identify_type rejects non-quotients") {
  // valid stable translation quiver that is no Dynkin quotient: valuation 2
  RawTranslationQuiver v2{1, {{0, 0, 2}}, {0}};
  CHECK_THROWS_AS(identify_type(v2), Error);
  RawTranslationQuiver invalid{2, {{0, 1, 1}}, {0, 0}};
  try {
    identify_type(invalid);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDynkinType);
  }
}

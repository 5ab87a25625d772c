#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bisem;

namespace {

bool represents(const SetAlgebra& sa, const AlgebraTable& alg) {
  if (!check_structure(sa) || !check_closure(sa) || !check_condition_bal1(sa) || !check_condition_un(sa)) {
    return false;
  }
  return derived_algebra(sa) == alg;
}

}  // namespace

TEST_CASE("set representation of weak Kleene") {
  const auto w = corpus::weak();
  const auto sa = build_set_algebra(w);
  REQUIRE(check_structure(sa));
  REQUIRE(check_closure(sa));
  const detail::SetOps ops{sa};
  // up(0) + (up(h) . up(0)) = up(h), which is not up(0)
  const auto inner = ops.cap(1, 0);
  CHECK(inner == 1);
  CHECK(ops.plus(0, inner) == 1);
  CHECK(ops.plus(0, inner) != 0);
  CHECK(sa.theta == std::vector<std::size_t>{0, 1, 2});
  CHECK(sa.star == std::vector<std::size_t>{2, 1, 0});
  CHECK(sa.bottom_y == std::optional<std::size_t>{0});
  CHECK(sa.top_x == std::optional<std::size_t>{2});
}

TEST_CASE("derived algebra of the set representation is the original") {
  for (const auto& alg : {corpus::weak(), corpus::strong(), builtin("bool_2"), builtin("lattice_1")}) {
    CHECK(derived_algebra(build_set_algebra(alg)) == alg);
  }
}

TEST_CASE("a scrambled correspondence no longer represents the algebra") {
  const auto w = corpus::weak_lattice_reduct();
  auto sa = build_set_algebra(w);
  REQUIRE(represents(sa, w));
  std::swap(sa.theta[0], sa.theta[1]);
  CHECK_FALSE(represents(sa, w));
  sa.theta = {0, 0, 2};
  CHECK_FALSE(check_structure(sa));
}

TEST_CASE("closure failures") {
  auto sa = build_set_algebra(corpus::weak_lattice_reduct());
  sa.x[1] = singleton(0);
  const auto r = check_closure(sa);
  CHECK_FALSE(r);
  CHECK_THROWS_AS(derived_algebra(sa), verification_error);
}

TEST_CASE("condition hey separates the involutive algebras") {
  CHECK(check_condition_hey(build_set_algebra(corpus::weak())));
  CHECK(check_condition_hey(build_set_algebra(builtin("bool_2"))));
  const auto r = check_condition_hey(build_set_algebra(corpus::strong()));
  CHECK_FALSE(r);
  CHECK(r.law == "hey");
  CHECK_THROWS_AS(check_condition_hey(build_set_algebra(corpus::weak_lattice_reduct())), usage_error);
}

TEST_CASE("condition latt") {
  CHECK(check_condition_latt(build_set_algebra(corpus::strong())));
  CHECK(check_condition_latt(build_set_algebra(builtin("bool_2"))));
  const auto r = check_condition_latt(build_set_algebra(corpus::weak()));
  REQUIRE_FALSE(r);
  CHECK(describe(r, corpus::weak().names()) == "latt upper (0, h)");
}

TEST_CASE("condition latt agrees with absorption over the corpus") {
  for (const auto& alg : corpus::dbs(4)) {
    const auto sa = build_set_algebra(alg);
    CHECK(check_condition_latt(sa).holds == check_absorption(alg).holds);
  }
}

TEST_CASE("set-level star, bounds and De Morgan laws") {
  for (const auto& alg : corpus::exhaustive(4, {VarietyTag::DDBS})) {
    const auto sa = build_set_algebra(alg);
    REQUIRE(check_star(sa));
    const detail::SetOps ops{sa};
    const auto& star = *sa.star;
    const std::size_t bot = sa.theta_inv(*sa.bottom_y);
    for (std::size_t a = 0; a < sa.size(); ++a) {
      CHECK(ops.plus(a, bot) == a);
      CHECK(ops.cap(a, *sa.top_x) == a);
      CHECK(star[sa.theta[star[sa.theta[a]]]] == a);
      for (std::size_t b = 0; b < sa.size(); ++b) {
        // (A . B)-dagger = A-dagger + B-dagger
        CHECK(star[sa.theta[ops.cap(a, b)]] == ops.plus(star[sa.theta[a]], star[sa.theta[b]]));
      }
    }
  }
}

TEST_CASE("a star that is not order-dual is caught") {
  auto sa = build_set_algebra(corpus::weak());
  sa.star = std::vector<std::size_t>{0, 1, 2};
  CHECK_FALSE(check_star(sa));
  sa.star.reset();
  CHECK_THROWS_AS(check_star(sa), usage_error);
}

TEST_CASE("representation certificates") {
  const auto b = verify_representation(builtin("bool_2"));
  CHECK(b.level == VarietyTag::IDBS);
  CHECK(b.conditions == std::vector<std::string>{"closure", "bal1", "un", "star", "hey"});
  CHECK(b.latt);

  const auto w = verify_representation(corpus::weak());
  CHECK(w.level == VarietyTag::IDBS);
  CHECK_FALSE(w.latt);

  const auto s = verify_representation(corpus::strong());
  CHECK(s.level == VarietyTag::DDBS);
  CHECK(s.conditions == std::vector<std::string>{"closure", "bal1", "un", "star"});

  CHECK(verify_representation(corpus::weak_lattice_reduct()).level == VarietyTag::DBS);
  CHECK_THROWS_AS(verify_representation(corpus::n5()), usage_error);
}

TEST_CASE("representation round trip over the corpus") {
  for (const auto& alg : corpus::all(4)) {
    const auto cert = verify_representation(alg);
    const auto level_tags = classify_variety(alg);
    CHECK(level_tags.count(cert.level));
    std::vector<Subset> sorted = cert.up_sets;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("representation round trip over generated Płonka sums") {
  for (const auto& alg : generate_plonka(8, 40, 11)) CHECK_NOTHROW(verify_representation(alg));
}

TEST_CASE("representation level ordering") {
  using V = VarietyTag;
  CHECK(representation_level({V::DBS}) == V::DBS);
  CHECK(representation_level({V::DBS, V::BDBS}) == V::BDBS);
  CHECK(representation_level({V::DBS, V::BDBS, V::DDBS}) == V::DDBS);
  CHECK(representation_level({V::DBS, V::BDBS, V::DDBS, V::IDBS}) == V::IDBS);
}

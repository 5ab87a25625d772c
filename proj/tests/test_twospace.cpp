#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bisem;

namespace {

AlgebraTable boolean_square() {
  // {0, a, b, 1} with a and b incomparable
  const std::vector<std::vector<Elem>> meet{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  const std::vector<std::vector<Elem>> join{{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  return AlgebraTable::from_rows({"0", "a", "b", "1"}, meet, join, std::vector<Elem>{3, 2, 1, 0}, Elem{0},
                                 Elem{3});
}

TwoSpace space_for(const AlgebraTable& alg) {
  return alg.signature().includes(Signature::full()) ? build_2space_star(alg) : build_2space(alg);
}

AlgebraTable comparable_reduct(const AlgebraTable& alg) {
  return alg.signature().includes(Signature::full()) ? alg : alg.reduct(Signature::lattice());
}

}  // namespace

TEST_CASE("weak Kleene filter space is a four-point chain") {
  const auto fs = filter_space(corpus::weak());
  REQUIRE(fs.size() == 4);
  for (std::size_t p = 0; p < fs.size(); ++p) {
    for (std::size_t q = 0; q < fs.size(); ++q) CHECK((fs.below(p, q) || fs.below(q, p)));
  }
  CHECK(fs.points[0] == 0);
  CHECK(check_fspace(fs));
  CHECK(check_fspace(ideal_space(corpus::weak())));
}

TEST_CASE("removing a meet of two points breaks glb closure") {
  auto fs = filter_space(boolean_square());
  REQUIRE(check_fspace(fs));
  const Subset only_top = singleton(3);
  const auto p = fs.find_point(only_top);
  REQUIRE(p);
  fs.points.erase(fs.points.begin() + static_cast<std::ptrdiff_t>(*p));
  const auto r = check_fspace(fs);
  REQUIRE_FALSE(r);
  CHECK(r.law == "fspace(1) glb");
}

TEST_CASE("fspace clauses catch broken subbasis data") {
  const auto good = filter_space(corpus::weak());
  auto fs = good;
  fs.generators[0] = 9;
  CHECK(check_fspace(fs).law == "fspace(2) generator");
  fs = good;
  fs.subbasis[0] = 0;
  CHECK(check_fspace(fs).law == "fspace(2) principal");
  fs = good;
  fs.points.push_back(fs.points.back());
  CHECK(check_fspace(fs).law == "fspace(0) distinct points");
  fs = good;
  fs.generators.pop_back();
  CHECK(check_fspace(fs).law == "fspace(0) shape");
}

TEST_CASE("2space conditions on the Kleene algebras") {
  const auto w = build_2space_star(corpus::weak());
  CHECK(check_2space(w));
  CHECK(check_2space_star(w, TwoSpaceGrade::star));
  CHECK(check_2space_star(w, TwoSpaceGrade::involutive));

  const auto s = build_2space_star(corpus::strong());
  CHECK(check_2space_star(s, TwoSpaceGrade::star));
  const auto r = check_2space_star(s, TwoSpaceGrade::involutive);
  CHECK_FALSE(r);
  CHECK(r.law == "hey");

  CHECK_FALSE(check_2space_star(build_2space(corpus::weak())));
}

TEST_CASE("two-variable form of the last condition") {
  const auto r = check_condition_last_two_variable(build_2space_star(corpus::weak()));
  REQUIRE_FALSE(r);
  CHECK(r.witness == std::vector<std::size_t>{2, 0});
  // the same pair fails on bool_2, where the one-variable form holds
  const auto b = build_2space_star(builtin("bool_2"));
  CHECK(check_condition_last_two_variable(b).witness == std::vector<std::size_t>{1, 0});
  CHECK(check_2space_star(b, TwoSpaceGrade::involutive));
  CHECK_THROWS_AS(check_condition_last_two_variable(build_2space(corpus::weak())), usage_error);
}

TEST_CASE("a swapped correspondence is rejected") {
  const auto good = build_2space(corpus::weak());
  auto ts = good;
  std::swap(ts.rho[0], ts.rho[1]);
  CHECK_FALSE(check_2space(ts));
  ts = good;
  std::swap(ts.rho[0], ts.rho[2]);
  CHECK_FALSE(check_2space_isomorphic(ts, good));
  CHECK(algebra_of_2space(ts) != corpus::weak_lattice_reduct());
}

TEST_CASE("object round trip over the corpus") {
  for (const auto& alg : corpus::all(4)) {
    const auto ts = space_for(alg);
    INFO(print_balg(alg));
    REQUIRE(check_2space(ts));
    if (ts.has_star()) {
      const auto grade = in_variety(alg, VarietyTag::IDBS) ? TwoSpaceGrade::involutive : TwoSpaceGrade::star;
      CHECK(check_2space_star(ts, grade));
    }
    CHECK(algebra_of_2space(ts) == comparable_reduct(alg));
    CHECK(check_2space_isomorphic(ts, space_for(algebra_of_2space(ts))));
  }
}

TEST_CASE("identity morphism") {
  const auto ts = build_2space_star(corpus::weak());
  const auto m = dualize_hom(ts, ts, identity_map(3));
  CHECK(m == identity_morphism(ts));
  CHECK(check_morphism(ts, ts, m));
  CHECK(recover_hom(ts, ts, m) == identity_map(3));
}

TEST_CASE("dual of the inclusion of bool_2 into weak Kleene") {
  const auto b = builtin("bool_2");
  const auto w = corpus::weak();
  const auto homs = enumerate_homomorphisms(b, w, Signature::full());
  REQUIRE(homs.size() == 1);
  const auto& f = homs[0];
  CHECK(f.image == std::vector<Elem>{0, 2});
  const auto sb = build_2space_star(b);
  const auto sw = build_2space_star(w);
  const auto m = dualize_hom(sb, sw, f);
  CHECK(check_morphism(sw, sb, m));
  CHECK(recover_hom(sw, sb, m) == f);
}

TEST_CASE("dual of the constant one-half map") {
  const auto wl = corpus::weak_lattice_reduct();
  const Homomorphism f{{1, 1, 1}};
  REQUIRE(is_homomorphism(wl, wl, f, Signature::lattice()));
  const auto ts = build_2space(wl);
  const auto m = dualize_hom(ts, ts, f);
  CHECK(check_morphism(ts, ts, m));
  CHECK(recover_hom(ts, ts, m) == f);
}

TEST_CASE("point maps that are not preimage maps are rejected") {
  const auto ts = build_2space_star(corpus::weak());
  const auto id = identity_morphism(ts);
  for (std::size_t p = 0; p < id.psi.size(); ++p) {
    for (std::size_t q = 0; q < ts.left.size(); ++q) {
      if (q == p) continue;
      auto m = id;
      m.psi[p] = q;
      CHECK_THROWS_AS(recover_hom(ts, ts, m), verification_error);
    }
  }
  auto m = id;
  m.chi.pop_back();
  CHECK_FALSE(check_morphism(ts, ts, m));
  CHECK_THROWS_AS(dualize_hom(ts, ts, Homomorphism{{0, 1}}), usage_error);
}

TEST_CASE("morphism duality over small corpus algebras") {
  const auto algs = corpus::all(3);
  std::vector<TwoSpace> spaces;
  for (const auto& a : algs) spaces.push_back(space_for(a));
  for (std::size_t i = 0; i < algs.size(); ++i) {
    for (std::size_t j = 0; j < algs.size(); ++j) {
      const auto sig = algs[i].signature().intersect(algs[j].signature());
      const auto& si = spaces[i];
      const auto& sj = spaces[j];
      for (const auto& f : enumerate_homomorphisms(algs[i].reduct(sig), algs[j].reduct(sig), sig)) {
        const auto m = dualize_hom(si, sj, f);
        REQUIRE(check_morphism(sj, si, m));
        CHECK(recover_hom(sj, si, m) == f);
      }
    }
  }
}

TEST_CASE("duality is contravariant on composable pairs") {
  const auto b = builtin("bool_2");
  const auto w = corpus::weak();
  const auto sb = build_2space_star(b);
  const auto sw = build_2space_star(w);
  const auto wl = corpus::weak_lattice_reduct();
  const auto swl = build_2space(wl);
  const auto bl = b.reduct(Signature::lattice());
  const auto sbl = build_2space(bl);
  for (const auto& f : enumerate_homomorphisms(bl, wl, Signature::lattice())) {
    for (const auto& g : enumerate_homomorphisms(wl, wl, Signature::lattice())) {
      const auto lhs = dualize_hom(sbl, swl, compose(g, f));
      const auto rhs = compose(dualize_hom(sbl, swl, f), dualize_hom(swl, swl, g));
      CHECK(lhs == rhs);
    }
  }
  const auto inc = enumerate_homomorphisms(b, w, Signature::full()).at(0);
  CHECK(compose(dualize_hom(sb, sw, inc), dualize_hom(sw, sw, identity_map(3))) == dualize_hom(sb, sw, inc));
}

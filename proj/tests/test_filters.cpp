#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bisem;

namespace {

template <class T>
std::vector<Subset> masks(const std::vector<T>& v) {
  std::vector<Subset> out;
  for (const auto& e : v) out.push_back(e.members);
  return out;
}

Subset set_of(std::initializer_list<std::size_t> xs) {
  Subset s = 0;
  for (auto x : xs) s |= singleton(x);
  return s;
}

}  // namespace

TEST_CASE("weak Kleene filters and ideals") {
  const auto w = corpus::weak();
  // elements 0, h, 1 sit at positions 0, 1, 2
  CHECK(masks(filters(w)) == std::vector<Subset>{set_of({2}), set_of({0, 2}), set_of({0, 1, 2})});
  CHECK(masks(prime_filters(w)) == std::vector<Subset>{set_of({2}), set_of({0, 2})});
  CHECK(masks(ideals(w)) == std::vector<Subset>{set_of({0}), set_of({0, 2}), set_of({0, 1, 2})});
  CHECK(masks(prime_ideals(w)) == std::vector<Subset>{set_of({0}), set_of({0, 2})});
}

TEST_CASE("filters and ideals match their definitions on the corpus") {
  for (const auto& alg : corpus::all(4)) {
    const auto fs = filters(alg);
    const auto is = ideals(alg);
    REQUIRE(masks(fs) == oracle::filters(alg));
    REQUIRE(masks(is) == oracle::ideals(alg));
    for (const auto& f : fs) CHECK(is_prime(alg, f) == oracle::prime_filter(alg, f.members));
    for (const auto& i : is) CHECK(is_prime(alg, i) == oracle::prime_ideal(alg, i.members));
  }
}

TEST_CASE("every filter of a finite algebra is principal") {
  for (const auto& alg : corpus::dbs(4)) {
    const auto ord = induced_order(alg, OrderKind::meet);
    const auto fs = filters(alg);
    CHECK(fs.size() == alg.size());
    for (const auto& f : fs) {
      bool principal = false;
      for (std::size_t a = 0; a < alg.size(); ++a) principal = principal || ord.up_set(a) == f.members;
      CHECK(principal);
    }
  }
}

TEST_CASE("separation witnesses") {
  const auto w = corpus::weak();
  CHECK(separation_witness(w, 2, 0).members == set_of({2}));
  CHECK(separation_witness(w, 0, 1).members == set_of({0, 2}));
  CHECK_THROWS_AS(separation_witness(w, 1, 0), usage_error);
  CHECK_THROWS_AS(separation_witness(w, 0, 0), usage_error);
  CHECK_THROWS_AS(separation_witness(w, 0, 7), usage_error);
  CHECK_THROWS_AS(separation_witness(corpus::n5(), 1, 0), usage_error);
}

TEST_CASE("separation succeeds on every distributive corpus pair") {
  for (const auto& alg : corpus::dbs(4)) {
    for (std::size_t a = 0; a < alg.size(); ++a) {
      for (std::size_t b = 0; b < alg.size(); ++b) {
        if (alg.meet(a, b) == a) continue;
        const auto f = separation_witness(alg, a, b);
        CHECK(f.contains(a));
        CHECK_FALSE(f.contains(b));
        CHECK(oracle::prime_filter(alg, f.members));
      }
    }
  }
}

TEST_CASE("up-set and down-set families") {
  const auto w = corpus::weak();
  const auto up = up_family(w);
  // up-set bitmasks are over the filter list {1}, {0,1}, {0,h,1}
  CHECK(up[0].filters == set_of({1, 2}));
  CHECK(up[1].filters == set_of({2}));
  CHECK(up[2].filters == set_of({0, 1, 2}));
  const auto down = down_family(w);
  CHECK(down[0].ideals == 0);
  CHECK(down[1].ideals == set_of({0, 1}));
  CHECK(down[2].ideals == set_of({0}));
}

TEST_CASE("up-sets and down-sets track the induced orders") {
  for (const auto& alg : corpus::dbs(4)) {
    const auto up = up_family(alg);
    const auto down = down_family(alg);
    const std::size_t n = alg.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        // x -> up-set is injective and follows the meet order
        CHECK(is_subset(up[x].filters, up[y].filters) == (alg.meet(x, y) == x));
        CHECK(is_subset(down[x].ideals, down[y].ideals) == (alg.join(x, y) == y));
        CHECK(up[alg.meet(x, y)].filters == (up[x].filters & up[y].filters));
        CHECK(down[alg.join(x, y)].ideals == (down[x].ideals | down[y].ideals));
      }
    }
  }
}

TEST_CASE("intersections of filters are filters or empty") {
  for (const auto& alg : corpus::dbs(4)) {
    const auto fs = oracle::filters(alg);
    for (auto f : fs) {
      for (auto g : fs) {
        const Subset both = f & g;
        if (both == 0) continue;
        CHECK(std::find(fs.begin(), fs.end(), both) != fs.end());
      }
    }
  }
}

TEST_CASE("prime filters are join-dense among the filters") {
  for (const auto& alg : corpus::dbs(4)) {
    const auto fs = filters(alg);
    const auto primes = prime_filters(alg);
    for (const auto& f : fs) {
      if (f.members == full_set(alg.size())) continue;
      Subset meet_of_primes = full_set(alg.size());
      for (const auto& p : primes) {
        if (is_subset(f.members, p.members)) meet_of_primes &= p.members;
      }
      CHECK(meet_of_primes == f.members);
    }
  }
}

TEST_CASE("filter enumeration rejects oversized universes") {
  std::vector<std::string> names;
  std::vector<Elem> t;
  const std::size_t n = max_filter_universe + 1;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.push_back(static_cast<Elem>(std::max(i, j)));
  }
  const AlgebraTable big(names, t, t);
  CHECK_THROWS_AS(filters(big), usage_error);
}

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "bisem/bisem.hpp"

namespace oracle {

using bisem::AlgebraTable;
using bisem::Elem;
using bisem::Subset;

inline bool in(Subset s, std::size_t a) { return ((s >> a) & 1U) != 0; }

// Straight from the definition: non-empty, a in S and a meet b = a imply
// b in S, and closed under meet. No use of induced orders.
inline std::vector<Subset> filters(const AlgebraTable& alg) {
  const std::size_t n = alg.size();
  std::vector<Subset> out;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!in(s, a)) continue;
        if (alg.meet(a, b) == a && !in(s, b)) ok = false;
        if (in(s, b) && !in(s, alg.meet(a, b))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<Subset> ideals(const AlgebraTable& alg) {
  const std::size_t n = alg.size();
  std::vector<Subset> out;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!in(s, a)) continue;
        if (alg.join(b, a) == a && !in(s, b)) ok = false;
        if (in(s, b) && !in(s, alg.join(a, b))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline bool prime_filter(const AlgebraTable& alg, Subset s) {
  if (s == (Subset{1} << alg.size()) - 1) return false;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    for (std::size_t b = 0; b < alg.size(); ++b) {
      if (in(s, alg.join(a, b)) && !in(s, a) && !in(s, b)) return false;
    }
  }
  return true;
}

inline bool prime_ideal(const AlgebraTable& alg, Subset s) {
  if (s == (Subset{1} << alg.size()) - 1) return false;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    for (std::size_t b = 0; b < alg.size(); ++b) {
      if (in(s, alg.meet(a, b)) && !in(s, a) && !in(s, b)) return false;
    }
  }
  return true;
}

// Every map src -> dst preserving the operations present in both, by
// counting through all n^m image vectors.
inline std::vector<std::vector<Elem>> homs(const AlgebraTable& src, const AlgebraTable& dst) {
  const std::size_t m = src.size(), n = dst.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(m, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) {
        ok = f[src.meet(a, b)] == dst.meet(f[a], f[b]) && f[src.join(a, b)] == dst.join(f[a], f[b]);
      }
      if (ok && src.has_neg() && dst.has_neg()) ok = f[src.neg(a)] == dst.neg(f[a]);
    }
    if (ok && src.has_zero() && dst.has_zero()) ok = f[src.zero()] == dst.zero();
    if (ok && src.has_one() && dst.has_one()) ok = f[src.one()] == dst.one();
    if (ok) out.push_back(f);
    std::size_t i = m;
    while (i > 0 && f[i - 1] == n - 1) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  return out;
}

inline bool isomorphic(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.size() != b.size() || a.signature() != b.signature()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.permuted(p).renamed(b.names()) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle

namespace corpus {

// Exhaustive representatives of sizes 1..max_n in the listed varieties.
inline std::vector<bisem::AlgebraTable> exhaustive(std::size_t max_n, std::vector<bisem::VarietyTag> varieties) {
  std::vector<bisem::AlgebraTable> out;
  for (auto v : varieties) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto& alg : bisem::enumerate_exhaustive(n, v)) out.push_back(std::move(alg));
    }
  }
  return out;
}

inline std::vector<bisem::AlgebraTable> dbs(std::size_t max_n) { return exhaustive(max_n, {bisem::VarietyTag::DBS}); }

inline std::vector<bisem::AlgebraTable> all(std::size_t max_n) {
  using bisem::VarietyTag;
  return exhaustive(max_n, {VarietyTag::SEM, VarietyTag::DBS, VarietyTag::DLAT, VarietyTag::BDBS, VarietyTag::DDBS,
                            VarietyTag::IDBS});
}

inline bisem::AlgebraTable weak() { return bisem::builtin("weak_kleene_3"); }
inline bisem::AlgebraTable weak_lattice_reduct() { return weak().reduct(bisem::Signature::lattice()); }
inline bisem::AlgebraTable strong() { return bisem::builtin("strong_kleene_3"); }

// Non-distributive five-element lattice N5: 0 < a < c < 1, 0 < b < 1.
inline bisem::AlgebraTable n5() {
  const std::vector<std::string> names{"0", "a", "b", "c", "1"};
  auto leq = [](std::size_t x, std::size_t y) {
    if (x == y || x == 0 || y == 4) return true;
    return x == 1 && y == 3;
  };
  std::vector<std::vector<bisem::Elem>> meet(5, std::vector<bisem::Elem>(5)), join = meet;
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = 0; y < 5; ++y) {
      std::size_t best_m = 0, best_j = 4;
      for (std::size_t z = 0; z < 5; ++z) {
        if (leq(z, x) && leq(z, y) && leq(best_m, z)) best_m = z;
        if (leq(x, z) && leq(y, z) && leq(z, best_j)) best_j = z;
      }
      meet[x][y] = static_cast<bisem::Elem>(best_m);
      join[x][y] = static_cast<bisem::Elem>(best_j);
    }
  }
  return bisem::AlgebraTable::from_rows(names, meet, join);
}

}  // namespace corpus

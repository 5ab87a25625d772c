#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"
#include "bisem/laws.hpp"
#include "bisem/morphism.hpp"
#include "bisem/order.hpp"
#include "bisem/plonka.hpp"

namespace bisem {

inline constexpr std::size_t max_exhaustive_size = 5;
inline constexpr std::size_t max_plonka_component = 4;
inline constexpr std::size_t max_plonka_index = 3;

enum class CorpusMode { exhaustive, plonka };

struct CorpusSpec {
  std::size_t size = 1;
  VarietyTag variety = VarietyTag::DBS;
  CorpusMode mode = CorpusMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

/// Universe names a, b, c, ... (then e26, e27, ... past z).
inline std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return out;
}

/// Meet table, join table, then neg, zero, one where present, as one vector.
inline std::vector<Elem> encode(const AlgebraTable& alg) {
  std::vector<Elem> out(alg.meet_table().begin(), alg.meet_table().end());
  out.insert(out.end(), alg.join_table().begin(), alg.join_table().end());
  if (alg.has_neg()) out.insert(out.end(), alg.neg_table()->begin(), alg.neg_table()->end());
  if (alg.has_zero()) out.push_back(alg.zero());
  if (alg.has_one()) out.push_back(alg.one());
  return out;
}

namespace detail {

// encode(alg.permuted(perm)) without building the algebra.
inline void permuted_encoding(const AlgebraTable& alg, const std::vector<std::size_t>& perm,
                              const std::vector<std::size_t>& inv, std::vector<Elem>& out) {
  const std::size_t n = alg.size();
  out.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(static_cast<Elem>(perm[alg.meet(inv[i], inv[j])]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(static_cast<Elem>(perm[alg.join(inv[i], inv[j])]));
  }
  if (alg.has_neg()) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<Elem>(perm[alg.neg(inv[i])]));
  }
  if (alg.has_zero()) out.push_back(static_cast<Elem>(perm[alg.zero()]));
  if (alg.has_one()) out.push_back(static_cast<Elem>(perm[alg.one()]));
}

}  // namespace detail

/// The lexicographically least encoding over all relabellings, realised as
/// an algebra with universe a, b, c, ...
inline AlgebraTable canonical_form(const AlgebraTable& alg) {
  const std::size_t n = alg.size();
  if (n > 8) throw usage_error("canonical form is limited to 8 elements");
  std::vector<std::size_t> perm(n), inv(n), best_perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best, cur;
  do {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    detail::permuted_encoding(alg, perm, inv, cur);
    if (best.empty() || cur < best) {
      best = cur;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return alg.permuted(best_perm).renamed(letter_names(n));
}

/// Every idempotent, commutative, associative table on n elements, flat and
/// row-major, in lexicographic order.
inline std::vector<std::vector<Elem>> labelled_semilattices(std::size_t n) {
  constexpr Elem unset = 0xff;
  std::vector<Elem> t(n * n, unset);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i] = static_cast<Elem>(i);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  auto consistent = [&]() {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Elem ab = t[a * n + b];
        if (ab == unset) continue;
        for (std::size_t c = 0; c < n; ++c) {
          const Elem bc = t[b * n + c];
          if (bc == unset) continue;
          const Elem l = t[ab * n + c];
          const Elem r = t[a * n + bc];
          if (l != unset && r != unset && l != r) return false;
        }
      }
    }
    return true;
  };
  std::vector<std::vector<Elem>> out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    const auto [i, j] = cells[k];
    for (std::size_t v = 0; v < n; ++v) {
      t[i * n + j] = t[j * n + i] = static_cast<Elem>(v);
      if (consistent()) self(self, k + 1);
    }
    t[i * n + j] = t[j * n + i] = unset;
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline bool distributive_pair(const std::vector<Elem>& m, const std::vector<Elem>& j, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (m[x * n + j[y * n + z]] != j[m[x * n + y] * n + m[x * n + z]]) return false;
        if (j[x * n + m[y * n + z]] != m[j[x * n + y] * n + j[x * n + z]]) return false;
      }
    }
  }
  return true;
}

inline std::optional<Elem> identity_of(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x;
    if (ok) return static_cast<Elem>(e);
  }
  return std::nullopt;
}

inline void involutions(std::size_t n, const std::function<void(const std::vector<Elem>&)>& fn) {
  std::vector<Elem> p(n, 0xff);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < n && p[i] != 0xff) ++i;
    if (i == n) {
      fn(p);
      return;
    }
    for (std::size_t j = i; j < n; ++j) {
      if (p[j] != 0xff) continue;
      p[i] = static_cast<Elem>(j);
      p[j] = static_cast<Elem>(i);
      self(self, i + 1);
      p[i] = p[j] = 0xff;
    }
  };
  rec(rec, 0);
}

inline bool accepted(const AlgebraTable& alg, VarietyTag v) {
  switch (v) {
    case VarietyTag::SEM:
      return std::equal(alg.meet_table().begin(), alg.meet_table().end(), alg.join_table().begin());
    case VarietyTag::DLAT: return static_cast<bool>(check_absorption(alg));
    case VarietyTag::DDBS: return static_cast<bool>(check_demorgan(alg));
    case VarietyTag::IDBS: return check_demorgan(alg) && check_involutive(alg);
    default: return true;
  }
}

}  // namespace detail

/// One representative per isomorphism class of n-element algebras in the
/// variety, in canonical form, sorted by encoding. BDBS members carry zero
/// and one; DDBS and IDBS members also carry neg.
inline std::vector<AlgebraTable> enumerate_exhaustive(std::size_t n, VarietyTag variety) {
  if (n < 1 || n > max_exhaustive_size) {
    throw usage_error("exhaustive enumeration needs 1 <= n <= " + std::to_string(max_exhaustive_size));
  }
  const auto tables = labelled_semilattices(n);
  std::set<std::vector<Elem>> meet_reps;
  for (const auto& t : tables) {
    const AlgebraTable alg(letter_names(n), t, t);
    const AlgebraTable canon = canonical_form(alg);
    meet_reps.emplace(canon.meet_table().begin(), canon.meet_table().end());
  }
  const bool bounded = variety == VarietyTag::BDBS || variety == VarietyTag::DDBS || variety == VarietyTag::IDBS;
  const bool with_neg = variety == VarietyTag::DDBS || variety == VarietyTag::IDBS;
  std::map<std::vector<Elem>, AlgebraTable> found;
  auto offer = [&](const AlgebraTable& alg) {
    if (!detail::accepted(alg, variety)) return;
    AlgebraTable canon = canonical_form(alg);
    auto key = encode(canon);
    found.emplace(std::move(key), std::move(canon));
  };
  for (const auto& m : meet_reps) {
    for (const auto& j : tables) {
      if (!detail::distributive_pair(m, j, n)) continue;
      if (!bounded) {
        offer(AlgebraTable(letter_names(n), m, j));
        continue;
      }
      const auto one = detail::identity_of(m, n);
      const auto zero = detail::identity_of(j, n);
      if (!one || !zero) continue;
      if (!with_neg) {
        offer(AlgebraTable(letter_names(n), m, j, std::nullopt, zero, one));
        continue;
      }
      detail::involutions(n, [&](const std::vector<Elem>& neg) {
        offer(AlgebraTable(letter_names(n), m, j, neg, zero, one));
      });
    }
  }
  std::vector<AlgebraTable> out;
  for (auto& [key, alg] : found) out.push_back(std::move(alg));
  return out;
}

namespace detail {

inline AlgebraTable index_chain(std::size_t k) {
  std::vector<Elem> t(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = static_cast<Elem>(std::max(i, j));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("i" + std::to_string(i));
  return AlgebraTable(names, t, t);
}

// i0 and i1 below i2, with i0 v i1 = i2.
inline AlgebraTable index_vee() {
  const std::vector<std::vector<Elem>> rows{{0, 2, 2}, {2, 1, 2}, {2, 2, 2}};
  return AlgebraTable::from_rows({"i0", "i1", "i2"}, rows, rows);
}

}  // namespace detail

/// Index semilattices of at most max_plonka_index elements: the 1-element
/// one, the 2- and 3-chains, and the vee.
inline std::vector<AlgebraTable> plonka_indices() {
  return {detail::index_chain(1), detail::index_chain(2), detail::index_chain(3), detail::index_vee()};
}

/// `count` Płonka sums of distributive lattices of at most 4 elements over
/// random index semilattices, each of total size at most `max_size`.
/// Connecting maps on covering pairs are uniform among lattice
/// homomorphisms; the others are composites. Reproducible for a fixed seed.
inline std::vector<AlgebraTable> generate_plonka(std::size_t max_size, std::size_t count, std::uint64_t seed) {
  if (max_size < 1) throw usage_error("Płonka generation needs size >= 1");
  std::vector<AlgebraTable> lattices;
  for (std::size_t k = 1; k <= max_plonka_component; ++k) {
    for (auto& alg : enumerate_exhaustive(k, VarietyTag::DLAT)) lattices.push_back(std::move(alg));
  }
  const auto indices = plonka_indices();
  std::mt19937_64 rng(seed);
  std::vector<AlgebraTable> out;
  while (out.size() < count) {
    const AlgebraTable& index = indices[rng() % indices.size()];
    const std::size_t k = index.size();
    if (k > max_size) continue;
    std::vector<AlgebraTable> comps;
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      comps.push_back(lattices[rng() % lattices.size()]);
      total += comps.back().size();
    }
    if (total > max_size) continue;

    std::map<std::pair<std::size_t, std::size_t>, Homomorphism> maps;
    const InducedOrder order = induced_order(index, OrderKind::join);
    for (const auto& [i, j] : order.covering_pairs()) {
      const auto homs = enumerate_homomorphisms(comps[i], comps[j], Signature::lattice());
      maps[{i, j}] = homs[rng() % homs.size()];
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t j = 0; j < k; ++j) {
          if (maps.count({i, m}) && maps.count({m, j}) && !maps.count({i, j})) {
            maps[{i, j}] = compose(maps[{m, j}], maps[{i, m}]);
          }
        }
      }
    }
    std::vector<PlonkaLink> links;
    for (const auto& [key, map] : maps) links.push_back({key.first, key.second, map});
    AlgebraTable sum = plonka_sum(index, comps, links);
    sum = sum.renamed(letter_names(sum.size()));
    if (!check_distributive(sum)) throw std::logic_error("Płonka sum is not distributive");
    out.push_back(std::move(sum));
  }
  return out;
}

inline std::vector<AlgebraTable> generate_corpus(const CorpusSpec& spec) {
  if (spec.mode == CorpusMode::exhaustive) return enumerate_exhaustive(spec.size, spec.variety);
  if (spec.variety != VarietyTag::DBS) throw usage_error("Płonka mode generates DBS instances only");
  return generate_plonka(spec.size, spec.count, spec.seed);
}

}  // namespace bisem

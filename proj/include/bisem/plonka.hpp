#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"
#include "bisem/laws.hpp"
#include "bisem/morphism.hpp"

namespace bisem {

/// Connecting homomorphism from the component at index `from` to the one at
/// `to`; requires from <= to in the index order.
struct PlonkaLink {
  std::size_t from = 0;
  std::size_t to = 0;
  Homomorphism map;
};

namespace detail {

inline void require_index_semilattice(const AlgebraTable& index) {
  if (auto r = check_semilattice(index, Operation::join); !r) {
    throw usage_error("index is not a semilattice: " + describe(r, index.names()));
  }
  if (!std::equal(index.meet_table().begin(), index.meet_table().end(), index.join_table().begin())) {
    throw usage_error("index algebra must have meet = join");
  }
}

}  // namespace detail

/// Plonka sum of `components` over the join-semilattice `index`: the universe
/// is the disjoint union, and x in A_i, y in A_j combine inside A_{i join j}
/// after both are transported along the links. Identity links may be omitted;
/// every other comparable pair needs one. Constants and negation of the
/// components are dropped.
inline AlgebraTable plonka_sum(const AlgebraTable& index, const std::vector<AlgebraTable>& components,
                               const std::vector<PlonkaLink>& links) {
  detail::require_index_semilattice(index);
  const std::size_t k = index.size();
  if (components.size() != k) {
    throw usage_error("expected " + std::to_string(k) + " components, got " + std::to_string(components.size()));
  }
  auto leq = [&](std::size_t i, std::size_t j) { return index.join(i, j) == j; };

  std::map<std::pair<std::size_t, std::size_t>, Homomorphism> phi;
  for (std::size_t i = 0; i < k; ++i) phi[{i, i}] = identity_map(components[i].size());
  for (const auto& link : links) {
    if (link.from >= k || link.to >= k) throw usage_error("link index out of range");
    if (!leq(link.from, link.to)) {
      throw usage_error("link " + index.name(link.from) + " -> " + index.name(link.to) +
                        " goes against the index order");
    }
    const auto& src = components[link.from];
    const auto& dst = components[link.to];
    if (!is_homomorphism(src, dst, link.map, Signature::lattice())) {
      throw usage_error("link " + index.name(link.from) + " -> " + index.name(link.to) +
                        " is not a homomorphism");
    }
    auto [it, inserted] = phi.emplace(std::pair{link.from, link.to}, link.map);
    if (!inserted && it->second != link.map) {
      throw usage_error("non-functorial link system: link " + index.name(link.from) + " -> " +
                        index.name(link.to) + " is not the identity or is given twice");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (leq(i, j) && !phi.count({i, j})) {
        throw usage_error("missing link " + index.name(i) + " -> " + index.name(j));
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (leq(i, j) && leq(j, l) && compose(phi.at({j, l}), phi.at({i, j})) != phi.at({i, l})) {
          throw usage_error("non-functorial link system: " + index.name(i) + " -> " + index.name(j) +
                            " -> " + index.name(l));
        }
      }
    }
  }

  // universe layout
  std::vector<std::size_t> owner;
  std::vector<std::size_t> local;
  std::vector<std::size_t> offset(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    offset[i] = owner.size();
    for (std::size_t x = 0; x < components[i].size(); ++x) {
      owner.push_back(i);
      local.push_back(x);
    }
  }
  const std::size_t n = owner.size();
  if (n > max_universe) throw usage_error("Plonka sum exceeds the universe size limit");

  std::vector<std::string> names;
  for (std::size_t e = 0; e < n; ++e) names.push_back(components[owner[e]].name(local[e]));
  bool collision = false;
  for (std::size_t a = 0; a < n && !collision; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (names[a] == names[b]) {
        collision = true;
        break;
      }
    }
  }
  if (collision) {
    for (std::size_t e = 0; e < n; ++e) names[e] += "@" + index.name(owner[e]);
  }

  std::vector<Elem> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = owner[a], j = owner[b];
      const std::size_t top = index.join(i, j);
      const auto x = phi.at({i, top})(local[a]);
      const auto y = phi.at({j, top})(local[b]);
      const auto& c = components[top];
      meet[a * n + b] = static_cast<Elem>(offset[top] + c.meet(x, y));
      join[a * n + b] = static_cast<Elem>(offset[top] + c.join(x, y));
    }
  }
  return AlgebraTable(std::move(names), std::move(meet), std::move(join));
}

}  // namespace bisem

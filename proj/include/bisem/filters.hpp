#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"
#include "bisem/laws.hpp"
#include "bisem/order.hpp"
#include "bisem/subset.hpp"

namespace bisem {

/// Brute-force subset enumeration is used for filters and ideals, so the
/// universe is capped well below the bitmask width.
inline constexpr std::size_t max_filter_universe = 20;

/// Non-empty, upward closed under <=meet, closed under meet.
struct Filter {
  Subset members = 0;
  bool contains(std::size_t a) const { return bisem::contains(members, a); }
  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Non-empty, downward closed under <=join, closed under join.
struct Ideal {
  Subset members = 0;
  bool contains(std::size_t a) const { return bisem::contains(members, a); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

namespace detail {

// Every non-empty subset closed upward along `order` and under `op`, in
// increasing bitmask order.
inline std::vector<Subset> closed_subsets(const AlgebraTable& alg, OrderKind kind) {
  const std::size_t n = alg.size();
  if (n > max_filter_universe) {
    throw usage_error("filter enumeration supports at most " + std::to_string(max_filter_universe) +
                      " elements");
  }
  const InducedOrder order = induced_order(alg, kind);
  // For ideals, "upward" means downward in <=join.
  std::vector<Subset> seed(n);
  for (std::size_t a = 0; a < n; ++a) {
    seed[a] = kind == OrderKind::meet ? order.up_set(a) : order.down_set(a);
  }
  std::vector<Subset> out;
  const Subset all = full_set(n);
  for (Subset s = 1; s <= all; ++s) {
    bool ok = true;
    for_each_member(s, [&](std::size_t a) { ok = ok && is_subset(seed[a], s); });
    if (!ok) continue;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!contains(s, a)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!contains(s, b)) continue;
        const std::size_t c = kind == OrderKind::meet ? alg.meet(a, b) : alg.join(a, b);
        if (!contains(s, c)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace detail

inline std::vector<Filter> filters(const AlgebraTable& alg) {
  std::vector<Filter> out;
  for (Subset s : detail::closed_subsets(alg, OrderKind::meet)) out.push_back(Filter{s});
  return out;
}

inline std::vector<Ideal> ideals(const AlgebraTable& alg) {
  std::vector<Ideal> out;
  for (Subset s : detail::closed_subsets(alg, OrderKind::join)) out.push_back(Ideal{s});
  return out;
}

inline bool is_prime(const AlgebraTable& alg, const Filter& f) {
  if (f.members == full_set(alg.size())) return false;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    for (std::size_t b = 0; b < alg.size(); ++b) {
      if (f.contains(alg.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
    }
  }
  return true;
}

inline bool is_prime(const AlgebraTable& alg, const Ideal& i) {
  if (i.members == full_set(alg.size())) return false;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    for (std::size_t b = 0; b < alg.size(); ++b) {
      if (i.contains(alg.meet(a, b)) && !i.contains(a) && !i.contains(b)) return false;
    }
  }
  return true;
}

inline std::vector<Filter> prime_filters(const AlgebraTable& alg) {
  std::vector<Filter> out;
  for (const auto& f : filters(alg)) {
    if (is_prime(alg, f)) out.push_back(f);
  }
  return out;
}

inline std::vector<Ideal> prime_ideals(const AlgebraTable& alg) {
  std::vector<Ideal> out;
  for (const auto& i : ideals(alg)) {
    if (is_prime(alg, i)) out.push_back(i);
  }
  return out;
}

/// The first prime filter (in enumeration order) containing a and missing b.
/// Requires a distributive bisemilattice and a not <=meet b; under those
/// hypotheses a witness always exists, so not finding one throws logic_error.
inline Filter separation_witness(const AlgebraTable& alg, std::size_t a, std::size_t b) {
  if (a >= alg.size() || b >= alg.size()) throw usage_error("element index out of range");
  if (!is_bisemilattice(alg) || !check_distributive(alg)) {
    throw usage_error("separation needs a distributive bisemilattice");
  }
  if (alg.meet(a, b) == a) {
    throw usage_error(alg.name(a) + " <=meet " + alg.name(b) + ": nothing to separate");
  }
  for (const auto& f : prime_filters(alg)) {
    if (f.contains(a) && !f.contains(b)) return f;
  }
  throw std::logic_error("prime filter separation failed for " + alg.name(a) + ", " + alg.name(b));
}

/// Up-set of x: the filters containing x, as a bitmask over the filter list.
struct UpSetOfX {
  Elem label = 0;
  Subset filters = 0;
};

/// Down-set of x: the ideals NOT containing x, as a bitmask over the ideal list.
struct DownSetOfY {
  Elem label = 0;
  Subset ideals = 0;
};

inline std::vector<UpSetOfX> up_family(const AlgebraTable& alg, const std::vector<Filter>& fs) {
  std::vector<UpSetOfX> out;
  for (std::size_t x = 0; x < alg.size(); ++x) {
    Subset s = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (fs[k].contains(x)) s |= singleton(k);
    }
    out.push_back({static_cast<Elem>(x), s});
  }
  return out;
}

inline std::vector<DownSetOfY> down_family(const AlgebraTable& alg, const std::vector<Ideal>& is) {
  std::vector<DownSetOfY> out;
  for (std::size_t x = 0; x < alg.size(); ++x) {
    Subset s = 0;
    for (std::size_t k = 0; k < is.size(); ++k) {
      if (!is[k].contains(x)) s |= singleton(k);
    }
    out.push_back({static_cast<Elem>(x), s});
  }
  return out;
}

inline std::vector<UpSetOfX> up_family(const AlgebraTable& alg) { return up_family(alg, filters(alg)); }
inline std::vector<DownSetOfY> down_family(const AlgebraTable& alg) { return down_family(alg, ideals(alg)); }

}  // namespace bisem

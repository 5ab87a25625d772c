#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bisem {

// A finite subset of {0, ..., 63} packed into one machine word. Used both for
// subsets of an algebra's universe and for sets of points of a finite space.
using Subset = std::uint64_t;

inline constexpr std::size_t max_subset_width = 64;

constexpr Subset singleton(std::size_t i) { return Subset{1} << i; }

constexpr bool contains(Subset s, std::size_t i) { return ((s >> i) & 1U) != 0; }

constexpr Subset full_set(std::size_t n) {
  return n >= max_subset_width ? ~Subset{0} : singleton(n) - 1;
}

constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr std::size_t cardinality(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }

template <typename Fn>
constexpr void for_each_member(Subset s, Fn&& fn) {
  while (s != 0) {
    fn(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

inline std::vector<std::size_t> members(Subset s) {
  std::vector<std::size_t> out;
  for_each_member(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

// Renders a subset as "{a,b,c}" using the given names for members.
inline std::string format_subset(Subset s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += i < names.size() ? names[i] : std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace bisem

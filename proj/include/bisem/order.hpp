#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"
#include "bisem/laws.hpp"
#include "bisem/subset.hpp"

namespace bisem {

enum class OrderKind { meet, join };

inline const char* to_string(OrderKind k) { return k == OrderKind::meet ? "meet" : "join"; }

/// The partial order induced by one semilattice reduct:
/// a <=meet b iff a meet b = a, and a <=join b iff a join b = b.
class InducedOrder {
 public:
  InducedOrder(OrderKind kind, std::vector<Subset> above) : kind_(kind), above_(std::move(above)) {}

  OrderKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return above_.size(); }

  bool leq(std::size_t a, std::size_t b) const { return contains(above_[a], b); }

  // {b : a <= b}
  Subset up_set(std::size_t a) const { return above_[a]; }

  // {b : b <= a}
  Subset down_set(std::size_t a) const {
    Subset out = 0;
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(b, a)) out |= singleton(b);
    }
    return out;
  }

  bool covers(std::size_t lower, std::size_t upper) const {
    if (lower == upper || !leq(lower, upper)) return false;
    for (std::size_t c = 0; c < size(); ++c) {
      if (c != lower && c != upper && leq(lower, c) && leq(c, upper)) return false;
    }
    return true;
  }

  // Covering pairs (lower, upper), sorted by lower then upper.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (covers(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool is_partial_order() const {
    for (std::size_t a = 0; a < size(); ++a) {
      if (!leq(a, a)) return false;
      for (std::size_t b = 0; b < size(); ++b) {
        if (a != b && leq(a, b) && leq(b, a)) return false;
        for (std::size_t c = 0; c < size(); ++c) {
          if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
        }
      }
    }
    return true;
  }

 private:
  OrderKind kind_;
  std::vector<Subset> above_;
};

inline InducedOrder induced_order(const AlgebraTable& alg, OrderKind kind) {
  const auto op = kind == OrderKind::meet ? Operation::meet : Operation::join;
  if (auto r = check_semilattice(alg, op); !r) {
    throw usage_error(std::string(to_string(kind)) + " reduct is not a semilattice: " +
                      describe(r, alg.names()));
  }
  const std::size_t n = alg.size();
  std::vector<Subset> above(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool le = kind == OrderKind::meet ? alg.meet(a, b) == a : alg.join(a, b) == b;
      if (le) above[a] |= singleton(b);
    }
  }
  return InducedOrder(kind, std::move(above));
}

}  // namespace bisem

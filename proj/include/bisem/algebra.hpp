#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bisem/errors.hpp"
#include "bisem/subset.hpp"

namespace bisem {

// Index of an element in an algebra's universe.
using Elem = std::uint8_t;

inline constexpr std::size_t max_universe = max_subset_width;

// Operation symbols beyond the two binary operations, which every algebra
// carries. Equality and inclusion are componentwise.
struct Signature {
  bool neg = false;
  bool zero = false;
  bool one = false;

  static constexpr Signature lattice() { return {}; }
  static constexpr Signature bounded() { return {false, true, true}; }
  static constexpr Signature full() { return {true, true, true}; }

  constexpr bool includes(const Signature& other) const {
    return (neg || !other.neg) && (zero || !other.zero) && (one || !other.one);
  }
  constexpr Signature intersect(const Signature& other) const {
    return {neg && other.neg, zero && other.zero, one && other.one};
  }
  friend constexpr bool operator==(const Signature&, const Signature&) = default;

  std::string to_string() const {
    std::string out = "{meet,join";
    if (neg) out += ",neg";
    if (zero) out += ",zero";
    if (one) out += ",one";
    return out + "}";
  }
};

/// A finite algebra <A, meet, join[, neg][, zero][, one]> given by operation
/// tables over a named universe. Tables are stored row-major and indexed by
/// universe position; element names are whitespace-free tokens.
class AlgebraTable {
 public:
  AlgebraTable(std::vector<std::string> universe, std::vector<Elem> meet, std::vector<Elem> join,
               std::optional<std::vector<Elem>> neg = std::nullopt,
               std::optional<Elem> zero = std::nullopt, std::optional<Elem> one = std::nullopt)
      : universe_(std::move(universe)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        neg_(std::move(neg)),
        zero_(zero),
        one_(one) {
    validate();
  }

  // Builds an algebra from nested rows; rows must be square.
  static AlgebraTable from_rows(std::vector<std::string> universe,
                                const std::vector<std::vector<Elem>>& meet_rows,
                                const std::vector<std::vector<Elem>>& join_rows,
                                std::optional<std::vector<Elem>> neg = std::nullopt,
                                std::optional<Elem> zero = std::nullopt,
                                std::optional<Elem> one = std::nullopt) {
    const std::size_t n = universe.size();
    return AlgebraTable(std::move(universe), flatten(meet_rows, n, "meet"),
                        flatten(join_rows, n, "join"), std::move(neg), zero, one);
  }

  std::size_t size() const noexcept { return universe_.size(); }
  const std::vector<std::string>& names() const noexcept { return universe_; }
  const std::string& name(std::size_t i) const { return universe_.at(i); }

  std::optional<Elem> index_of(std::string_view token) const {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (universe_[i] == token) return static_cast<Elem>(i);
    }
    return std::nullopt;
  }

  Elem meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  Elem join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::span<const Elem> meet_table() const noexcept { return meet_; }
  std::span<const Elem> join_table() const noexcept { return join_; }

  bool has_neg() const noexcept { return neg_.has_value(); }
  bool has_zero() const noexcept { return zero_.has_value(); }
  bool has_one() const noexcept { return one_.has_value(); }

  Elem neg(std::size_t a) const { return neg_.value().at(a); }
  const std::optional<std::vector<Elem>>& neg_table() const noexcept { return neg_; }
  Elem zero() const { return zero_.value(); }
  Elem one() const { return one_.value(); }
  std::optional<Elem> zero_opt() const noexcept { return zero_; }
  std::optional<Elem> one_opt() const noexcept { return one_; }

  Signature signature() const noexcept { return {has_neg(), has_zero(), has_one()}; }

  // Drops every symbol not in `sig`. Symbols absent from this algebra stay absent.
  AlgebraTable reduct(const Signature& sig) const {
    return AlgebraTable(universe_, meet_, join_, sig.neg ? neg_ : std::nullopt,
                        sig.zero ? zero_ : std::nullopt, sig.one ? one_ : std::nullopt);
  }

  AlgebraTable renamed(std::vector<std::string> universe) const {
    return AlgebraTable(std::move(universe), meet_, join_, neg_, zero_, one_);
  }

  // Transports the algebra along a permutation: old element i becomes new
  // element perm[i], keeping its name.
  AlgebraTable permuted(std::span<const std::size_t> perm) const {
    const std::size_t n = size();
    if (perm.size() != n) throw usage_error("permutation size does not match universe");
    std::vector<std::string> names(n);
    std::vector<Elem> meet(n * n), join(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      names[perm[i]] = universe_[i];
      for (std::size_t j = 0; j < n; ++j) {
        meet[perm[i] * n + perm[j]] = static_cast<Elem>(perm[this->meet(i, j)]);
        join[perm[i] * n + perm[j]] = static_cast<Elem>(perm[this->join(i, j)]);
      }
    }
    std::optional<std::vector<Elem>> neg;
    if (neg_) {
      neg.emplace(n);
      for (std::size_t i = 0; i < n; ++i) (*neg)[perm[i]] = static_cast<Elem>(perm[(*neg_)[i]]);
    }
    std::optional<Elem> zero, one;
    if (zero_) zero = static_cast<Elem>(perm[*zero_]);
    if (one_) one = static_cast<Elem>(perm[*one_]);
    return AlgebraTable(std::move(names), std::move(meet), std::move(join), std::move(neg), zero,
                        one);
  }

  friend bool operator==(const AlgebraTable&, const AlgebraTable&) = default;

 private:
  static std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows, std::size_t n,
                                   const char* what) {
    if (rows.size() != n) {
      throw malformed_table(std::string(what) + " table has " + std::to_string(rows.size()) +
                            " rows, expected " + std::to_string(n));
    }
    std::vector<Elem> out;
    out.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw malformed_table(std::string(what) + " table is not square");
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }

  void validate() const {
    const std::size_t n = universe_.size();
    if (n == 0) throw malformed_table("universe must be non-empty");
    if (n > max_universe) {
      throw malformed_table("universe has " + std::to_string(n) + " elements, limit is " +
                            std::to_string(max_universe));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& token = universe_[i];
      if (token.empty() || std::any_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isspace(c) != 0;
          })) {
        throw malformed_table("element name '" + token + "' is empty or contains whitespace");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (universe_[j] == token) throw malformed_table("duplicate element name '" + token + "'");
      }
    }
    auto check_table = [n](const std::vector<Elem>& t, const char* what) {
      if (t.size() != n * n) throw malformed_table(std::string(what) + " table is not n x n");
      for (Elem e : t) {
        if (e >= n) throw malformed_table(std::string(what) + " table entry out of range");
      }
    };
    check_table(meet_, "meet");
    check_table(join_, "join");
    if (neg_) {
      if (neg_->size() != n) throw malformed_table("neg table must have one entry per element");
      std::vector<bool> hit(n, false);
      for (Elem e : *neg_) {
        if (e >= n) throw malformed_table("neg table entry out of range");
        if (hit[e]) throw malformed_table("neg is not a bijection");
        hit[e] = true;
      }
    }
    if (zero_ && *zero_ >= n) throw malformed_table("zero out of range");
    if (one_ && *one_ >= n) throw malformed_table("one out of range");
  }

  std::vector<std::string> universe_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::optional<std::vector<Elem>> neg_;
  std::optional<Elem> zero_;
  std::optional<Elem> one_;
};

}  // namespace bisem

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"

namespace bisem {

/// Outcome of a universally quantified check. On failure `law` names the
/// violated identity and `witness` holds the offending elements (or indices,
/// for checks over set families and spaces) in quantifier order.
struct CheckResult {
  bool holds = true;
  std::string law;
  std::vector<std::size_t> witness;

  explicit operator bool() const noexcept { return holds; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string law, std::vector<std::size_t> witness) {
    return {false, std::move(law), std::move(witness)};
  }
};

// "law (a, b)" using element names.
inline std::string describe(const CheckResult& r, const std::vector<std::string>& names) {
  if (r.holds) return "holds";
  std::string out = r.law + " (";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) out += ", ";
    const auto w = r.witness[i];
    out += w < names.size() ? names[w] : std::to_string(w);
  }
  return out + ")";
}

enum class Operation { meet, join };

/// Idempotence, commutativity and associativity, checked in that order.
inline CheckResult check_semilattice(std::span<const Elem> cells, std::size_t n) {
  if (n == 0 || cells.size() != n * n) throw malformed_table("operation table is not n x n");
  for (Elem e : cells) {
    if (e >= n) throw malformed_table("operation table entry out of range");
  }
  auto op = [&](std::size_t a, std::size_t b) -> std::size_t { return cells[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (op(a, a) != a) return CheckResult::fail("idempotence", {a});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) return CheckResult::fail("commutativity", {a, b});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (op(a, op(b, c)) != op(op(a, b), c)) return CheckResult::fail("associativity", {a, b, c});
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult check_semilattice(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> cells;
  for (const auto& row : rows) {
    if (row.size() != n) throw malformed_table("operation table is not square");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return check_semilattice(cells, n);
}

inline CheckResult check_semilattice(const AlgebraTable& alg, Operation op) {
  return check_semilattice(op == Operation::meet ? alg.meet_table() : alg.join_table(), alg.size());
}

inline bool is_bisemilattice(const AlgebraTable& alg) {
  return check_semilattice(alg, Operation::meet).holds && check_semilattice(alg, Operation::join).holds;
}

/// x meet (y join z) = (x meet y) join (x meet z) and its dual, for all triples.
inline CheckResult check_distributive(const AlgebraTable& alg) {
  const std::size_t n = alg.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z))) {
          return CheckResult::fail("meet distributes over join", {x, y, z});
        }
        if (alg.join(x, alg.meet(y, z)) != alg.meet(alg.join(x, y), alg.join(x, z))) {
          return CheckResult::fail("join distributes over meet", {x, y, z});
        }
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult check_absorption(const AlgebraTable& alg) {
  const std::size_t n = alg.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (alg.meet(x, alg.join(x, y)) != x) return CheckResult::fail("x meet (x join y) = x", {x, y});
      if (alg.join(x, alg.meet(x, y)) != x) return CheckResult::fail("x join (x meet y) = x", {x, y});
    }
  }
  return CheckResult::pass();
}

namespace detail {
inline void require(const AlgebraTable& alg, const Signature& sig, const char* check) {
  if (!alg.signature().includes(sig)) {
    throw usage_error(std::string(check) + " needs signature " + sig.to_string() + ", algebra has " +
                      alg.signature().to_string());
  }
}
}  // namespace detail

/// x meet 1 = x and x join 0 = x.
inline CheckResult check_bounded(const AlgebraTable& alg) {
  detail::require(alg, Signature::bounded(), "check_bounded");
  for (std::size_t x = 0; x < alg.size(); ++x) {
    if (alg.meet(x, alg.one()) != x) return CheckResult::fail("x meet 1 = x", {x});
    if (alg.join(x, alg.zero()) != x) return CheckResult::fail("x join 0 = x", {x});
  }
  return CheckResult::pass();
}

/// neg is an involution satisfying both De Morgan laws.
inline CheckResult check_demorgan(const AlgebraTable& alg) {
  detail::require(alg, Signature{true, false, false}, "check_demorgan");
  const std::size_t n = alg.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (alg.neg(alg.neg(x)) != x) return CheckResult::fail("x'' = x", {x});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (alg.join(alg.neg(x), alg.neg(y)) != alg.neg(alg.meet(x, y))) {
        return CheckResult::fail("x' join y' = (x meet y)'", {x, y});
      }
      if (alg.meet(alg.neg(x), alg.neg(y)) != alg.neg(alg.join(x, y))) {
        return CheckResult::fail("x' meet y' = (x join y)'", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

/// The involutive-bisemilattice base I1-I8, each axiom checked literally.
inline CheckResult check_involutive(const AlgebraTable& alg) {
  detail::require(alg, Signature::full(), "check_involutive");
  const std::size_t n = alg.size();
  auto j = [&](std::size_t a, std::size_t b) -> std::size_t { return alg.join(a, b); };
  auto m = [&](std::size_t a, std::size_t b) -> std::size_t { return alg.meet(a, b); };
  auto ng = [&](std::size_t a) -> std::size_t { return alg.neg(a); };
  for (std::size_t x = 0; x < n; ++x) {
    if (j(x, x) != x) return CheckResult::fail("I1 x join x = x", {x});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (j(x, y) != j(y, x)) return CheckResult::fail("I2 x join y = y join x", {x, y});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (j(x, j(y, z)) != j(j(x, y), z)) {
          return CheckResult::fail("I3 x join (y join z) = (x join y) join z", {x, y, z});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (ng(ng(x)) != x) return CheckResult::fail("I4 x'' = x", {x});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (m(x, y) != ng(j(ng(x), ng(y)))) return CheckResult::fail("I5 x meet y = (x' join y')'", {x, y});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (m(x, j(ng(x), y)) != m(x, y)) {
        return CheckResult::fail("I6 x meet (x' join y) = x meet y", {x, y});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (j(alg.zero(), x) != x) return CheckResult::fail("I7 0 join x = x", {x});
  }
  if (alg.zero() != ng(alg.one())) return CheckResult::fail("I8 0 = 1'", {});
  return CheckResult::pass();
}

enum class VarietyTag { SEM, DBS, BDBS, DDBS, IDBS, DLAT };

inline const char* to_string(VarietyTag t) {
  switch (t) {
    case VarietyTag::SEM: return "SEM";
    case VarietyTag::DBS: return "DBS";
    case VarietyTag::BDBS: return "BDBS";
    case VarietyTag::DDBS: return "DDBS";
    case VarietyTag::IDBS: return "IDBS";
    case VarietyTag::DLAT: return "DLAT";
  }
  return "?";
}

inline std::optional<VarietyTag> parse_variety(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "sem") return VarietyTag::SEM;
  if (lower == "dbs") return VarietyTag::DBS;
  if (lower == "bdbs") return VarietyTag::BDBS;
  if (lower == "ddbs") return VarietyTag::DDBS;
  if (lower == "idbs") return VarietyTag::IDBS;
  if (lower == "dlat") return VarietyTag::DLAT;
  return std::nullopt;
}

using VarietySet = std::set<VarietyTag>;

inline std::string to_string(const VarietySet& tags) {
  std::string out = "{";
  for (auto t : tags) {
    if (out.size() > 1) out += ", ";
    out += to_string(t);
  }
  return out + "}";
}

/// Every tag whose equational base holds. IDBS is decided by I1-I8 alone, so
/// the inclusion IDBS => DDBS is a checked fact rather than a construction.
inline VarietySet classify_variety(const AlgebraTable& alg) {
  VarietySet tags;
  if (!is_bisemilattice(alg)) return tags;
  const Signature sig = alg.signature();
  if (sig.includes(Signature::full()) && check_involutive(alg)) tags.insert(VarietyTag::IDBS);
  if (!check_distributive(alg)) return tags;
  tags.insert(VarietyTag::DBS);
  if (std::equal(alg.meet_table().begin(), alg.meet_table().end(), alg.join_table().begin())) {
    tags.insert(VarietyTag::SEM);
  }
  if (check_absorption(alg)) tags.insert(VarietyTag::DLAT);
  if (sig.includes(Signature::bounded()) && check_bounded(alg)) {
    tags.insert(VarietyTag::BDBS);
    if (sig.neg && check_demorgan(alg)) tags.insert(VarietyTag::DDBS);
  }
  return tags;
}

inline bool in_variety(const AlgebraTable& alg, VarietyTag v) { return classify_variety(alg).count(v) > 0; }

}  // namespace bisem

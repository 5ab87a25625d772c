#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"
#include "bisem/filters.hpp"
#include "bisem/laws.hpp"
#include "bisem/subset.hpp"

namespace bisem {

/// Two labelled families of sets X (over filter indices) and Y (over ideal
/// indices) with the correspondence theta : X -> Y, an optional order-dual
/// star : Y -> X and optional bounds. Entry k of each vector is the set
/// labelled k; theta and star act on positions, not on raw sets.
struct SetAlgebra {
  std::vector<std::string> labels;
  std::vector<Subset> x;
  std::vector<Subset> y;
  std::vector<std::size_t> theta;
  std::optional<std::vector<std::size_t>> star;
  std::optional<std::size_t> bottom_y;
  std::optional<std::size_t> top_x;

  std::size_t size() const noexcept { return x.size(); }

  std::optional<std::size_t> find_x(Subset s) const { return find(x, s); }
  std::optional<std::size_t> find_y(Subset s) const { return find(y, s); }

  std::size_t theta_inv(std::size_t j) const {
    for (std::size_t k = 0; k < theta.size(); ++k) {
      if (theta[k] == j) return k;
    }
    throw std::logic_error("theta is not onto");
  }

  std::size_t star_inv(std::size_t k) const {
    const auto& s = star.value();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == k) return j;
    }
    throw std::logic_error("star is not onto");
  }

 private:
  static std::optional<std::size_t> find(const std::vector<Subset>& fam, Subset s) {
    for (std::size_t k = 0; k < fam.size(); ++k) {
      if (fam[k] == s) return k;
    }
    return std::nullopt;
  }
};

/// X from the up-sets, Y from the down-sets, theta the identity on labels,
/// star sending the down-set of x to the up-set of x', bottom the down-set
/// of 0 and top the up-set of 1.
inline SetAlgebra build_set_algebra(const AlgebraTable& alg) {
  if (!is_bisemilattice(alg)) throw usage_error("set representation needs a bisemilattice");
  SetAlgebra sa;
  sa.labels = alg.names();
  for (const auto& u : up_family(alg)) sa.x.push_back(u.filters);
  for (const auto& d : down_family(alg)) sa.y.push_back(d.ideals);
  for (std::size_t a = 0; a < alg.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (sa.x[a] == sa.x[b]) {
        throw verification_error("up-sets of " + alg.name(b) + " and " + alg.name(a) + " coincide");
      }
      if (sa.y[a] == sa.y[b]) {
        throw verification_error("down-sets of " + alg.name(b) + " and " + alg.name(a) + " coincide");
      }
    }
    sa.theta.push_back(a);
  }
  if (alg.has_neg()) {
    sa.star.emplace();
    for (std::size_t a = 0; a < alg.size(); ++a) sa.star->push_back(alg.neg(a));
  }
  if (alg.has_zero()) sa.bottom_y = alg.zero();
  if (alg.has_one()) sa.top_x = alg.one();
  return sa;
}

inline CheckResult check_structure(const SetAlgebra& sa) {
  const std::size_t n = sa.size();
  if (n == 0) return CheckResult::fail("empty family", {});
  if (sa.y.size() != n || sa.theta.size() != n || sa.labels.size() != n) {
    return CheckResult::fail("family sizes differ", {});
  }
  auto is_perm = [n](const std::vector<std::size_t>& p) {
    std::vector<bool> hit(n, false);
    for (std::size_t v : p) {
      if (v >= n || hit[v]) return false;
      hit[v] = true;
    }
    return p.size() == n;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (sa.x[a] == sa.x[b]) return CheckResult::fail("X entries distinct", {b, a});
      if (sa.y[a] == sa.y[b]) return CheckResult::fail("Y entries distinct", {b, a});
    }
  }
  if (!is_perm(sa.theta)) return CheckResult::fail("theta bijective", {});
  if (sa.star && !is_perm(*sa.star)) return CheckResult::fail("star bijective", {});
  if (sa.bottom_y && *sa.bottom_y >= n) return CheckResult::fail("bottom in range", {});
  if (sa.top_x && *sa.top_x >= n) return CheckResult::fail("top in range", {});
  return CheckResult::pass();
}

/// X closed under intersection, Y under union, 0-bar least in Y and
/// 1-bar greatest in X when present.
inline CheckResult check_closure(const SetAlgebra& sa) {
  if (auto r = check_structure(sa); !r) return r;
  const std::size_t n = sa.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!sa.find_x(sa.x[a] & sa.x[b])) return CheckResult::fail("X closed under intersection", {a, b});
      if (!sa.find_y(sa.y[a] | sa.y[b])) return CheckResult::fail("Y closed under union", {a, b});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (sa.bottom_y && !is_subset(sa.y[*sa.bottom_y], sa.y[a])) {
      return CheckResult::fail("0-bar least in Y", {a});
    }
    if (sa.top_x && !is_subset(sa.x[a], sa.x[*sa.top_x])) {
      return CheckResult::fail("1-bar greatest in X", {a});
    }
  }
  return CheckResult::pass();
}

namespace detail {

// Position-level operations; valid once check_closure has passed.
struct SetOps {
  const SetAlgebra& sa;

  std::size_t cap(std::size_t a, std::size_t b) const { return sa.find_x(sa.x[a] & sa.x[b]).value(); }
  std::size_t cup_y(std::size_t p, std::size_t q) const { return sa.find_y(sa.y[p] | sa.y[q]).value(); }
  std::size_t plus(std::size_t a, std::size_t b) const {
    return sa.theta_inv(cup_y(sa.theta[a], sa.theta[b]));
  }
};

}  // namespace detail

/// A meet theta^-1(theta B union theta C) = theta^-1(theta(A meet B) union theta(A meet C)).
inline CheckResult check_condition_bal1(const SetAlgebra& sa) {
  if (auto r = check_closure(sa); !r) return r;
  const detail::SetOps ops{sa};
  const std::size_t n = sa.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = ops.cap(a, ops.plus(b, c));
        const std::size_t rhs = ops.plus(ops.cap(a, b), ops.cap(a, c));
        if (lhs != rhs) return CheckResult::fail("bal1", {a, b, c});
      }
    }
  }
  return CheckResult::pass();
}

/// P union theta(theta^-1 Q meet theta^-1 R) =
/// theta(theta^-1(P union Q) meet theta^-1(P union R)), over positions of Y.
inline CheckResult check_condition_un(const SetAlgebra& sa) {
  if (auto r = check_closure(sa); !r) return r;
  const detail::SetOps ops{sa};
  const std::size_t n = sa.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t lhs = ops.cup_y(p, sa.theta[ops.cap(sa.theta_inv(q), sa.theta_inv(r))]);
        const std::size_t rhs =
            sa.theta[ops.cap(sa.theta_inv(ops.cup_y(p, q)), sa.theta_inv(ops.cup_y(p, r)))];
        if (lhs != rhs) return CheckResult::fail("un", {p, q, r});
      }
    }
  }
  return CheckResult::pass();
}

/// (P union Q)* = P* meet Q*, and star . theta = theta^-1 . star^-1.
inline CheckResult check_star(const SetAlgebra& sa) {
  if (!sa.star) throw usage_error("star check needs a star map");
  if (auto r = check_closure(sa); !r) return r;
  const detail::SetOps ops{sa};
  const auto& star = *sa.star;
  const std::size_t n = sa.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (star[ops.cup_y(p, q)] != ops.cap(star[p], star[q])) {
        return CheckResult::fail("star order-dual", {p, q});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (star[sa.theta[a]] != sa.theta_inv(sa.star_inv(a))) {
      return CheckResult::fail("star theta coherence", {a});
    }
  }
  return CheckResult::pass();
}

/// theta(A meet (theta A)*) is contained in theta(A meet B).
inline CheckResult check_condition_hey(const SetAlgebra& sa) {
  if (!sa.star) throw usage_error("condition hey needs a star map");
  if (auto r = check_closure(sa); !r) return r;
  const detail::SetOps ops{sa};
  const std::size_t n = sa.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Subset lhs = sa.y[sa.theta[ops.cap(a, (*sa.star)[sa.theta[a]])]];
    for (std::size_t b = 0; b < n; ++b) {
      if (!is_subset(lhs, sa.y[sa.theta[ops.cap(a, b)]])) return CheckResult::fail("hey", {a, b});
    }
  }
  return CheckResult::pass();
}

/// theta^-1(theta A union theta(A meet B)) is contained in A, and A in
/// A meet theta^-1(theta A union theta B).
inline CheckResult check_condition_latt(const SetAlgebra& sa) {
  if (auto r = check_closure(sa); !r) return r;
  const detail::SetOps ops{sa};
  const std::size_t n = sa.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!is_subset(sa.x[ops.plus(a, ops.cap(a, b))], sa.x[a])) {
        return CheckResult::fail("latt lower", {a, b});
      }
      if (!is_subset(sa.x[a], sa.x[ops.cap(a, ops.plus(a, b))])) {
        return CheckResult::fail("latt upper", {a, b});
      }
    }
  }
  return CheckResult::pass();
}

/// The algebra <X, +, ., dagger, bot, top> on positions of X, named by the
/// labels. Symbols are present when the data for them is: dagger needs star,
/// bot needs 0-bar, top needs star and 0-bar or else 1-bar.
inline AlgebraTable derived_algebra(const SetAlgebra& sa) {
  if (auto r = check_closure(sa); !r) {
    throw verification_error("derived operations undefined: " + describe(r, sa.labels));
  }
  const detail::SetOps ops{sa};
  const std::size_t n = sa.size();
  std::vector<Elem> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet[a * n + b] = static_cast<Elem>(ops.cap(a, b));
      join[a * n + b] = static_cast<Elem>(ops.plus(a, b));
    }
  }
  std::optional<std::vector<Elem>> neg;
  if (sa.star) {
    neg.emplace();
    for (std::size_t a = 0; a < n; ++a) neg->push_back(static_cast<Elem>((*sa.star)[sa.theta[a]]));
  }
  std::optional<Elem> bot, top;
  if (sa.bottom_y) {
    bot = static_cast<Elem>(sa.theta_inv(*sa.bottom_y));
    if (sa.star) top = static_cast<Elem>((*sa.star)[*sa.bottom_y]);
  }
  if (!top && sa.top_x) top = static_cast<Elem>(*sa.top_x);
  return AlgebraTable(sa.labels, std::move(meet), std::move(join), std::move(neg), bot, top);
}

struct RepresentationCertificate {
  VarietyTag level = VarietyTag::DBS;
  Signature matched;
  std::vector<std::string> conditions;
  std::vector<Subset> up_sets;
  CheckResult latt;
};

namespace detail {

inline Signature signature_of_level(VarietyTag level) {
  switch (level) {
    case VarietyTag::BDBS: return Signature::bounded();
    case VarietyTag::DDBS:
    case VarietyTag::IDBS: return Signature::full();
    default: return Signature::lattice();
  }
}

}  // namespace detail

/// Highest of DBS < BDBS < DDBS < IDBS that the algebra belongs to.
inline VarietyTag representation_level(const VarietySet& tags) {
  if (tags.count(VarietyTag::DDBS)) return tags.count(VarietyTag::IDBS) ? VarietyTag::IDBS : VarietyTag::DDBS;
  if (tags.count(VarietyTag::BDBS)) return VarietyTag::BDBS;
  return VarietyTag::DBS;
}

/// Builds the set representation, checks the conditions required at the
/// algebra's level, and checks that x -> up-set of x is an isomorphism onto
/// the derived algebra in the level's signature. Throws verification_error
/// naming the first failure.
inline RepresentationCertificate verify_representation(const AlgebraTable& alg) {
  const VarietySet tags = classify_variety(alg);
  if (!tags.count(VarietyTag::DBS)) throw usage_error("representation needs a distributive bisemilattice");
  RepresentationCertificate cert;
  cert.level = representation_level(tags);
  cert.matched = detail::signature_of_level(cert.level);
  const AlgebraTable src = alg.reduct(cert.matched);
  const SetAlgebra sa = build_set_algebra(src);

  auto require = [&](const char* name, const CheckResult& r) {
    if (!r) throw verification_error(std::string(name) + " fails: " + describe(r, sa.labels));
    cert.conditions.emplace_back(name);
  };
  require("closure", check_closure(sa));
  require("bal1", check_condition_bal1(sa));
  require("un", check_condition_un(sa));
  if (cert.level == VarietyTag::DDBS || cert.level == VarietyTag::IDBS) require("star", check_star(sa));
  if (cert.level == VarietyTag::IDBS) require("hey", check_condition_hey(sa));
  cert.latt = check_condition_latt(sa);

  const AlgebraTable derived = derived_algebra(sa);
  if (derived.signature() != cert.matched) {
    throw verification_error("derived signature " + derived.signature().to_string() + " differs from " +
                             cert.matched.to_string());
  }
  const std::size_t n = alg.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (derived.meet(a, b) != src.meet(a, b)) {
        throw verification_error("intersection mismatch at (" + alg.name(a) + ", " + alg.name(b) + ")");
      }
      if (derived.join(a, b) != src.join(a, b)) {
        throw verification_error("sum mismatch at (" + alg.name(a) + ", " + alg.name(b) + ")");
      }
    }
    if (derived.has_neg() && derived.neg(a) != src.neg(a)) {
      throw verification_error("dagger mismatch at " + alg.name(a));
    }
  }
  if (derived.zero_opt() != src.zero_opt()) throw verification_error("bottom mismatch");
  if (derived.one_opt() != src.one_opt()) throw verification_error("top mismatch");
  cert.up_sets = sa.x;
  return cert;
}

}  // namespace bisem

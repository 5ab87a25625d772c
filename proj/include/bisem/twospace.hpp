#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/balbes.hpp"
#include "bisem/errors.hpp"
#include "bisem/filters.hpp"
#include "bisem/laws.hpp"
#include "bisem/morphism.hpp"
#include "bisem/subset.hpp"

namespace bisem {

/// A finite Fspace over an index set A. Each point is stored as the subset
/// of A it contains (a filter, an ideal, or the empty set), and points are
/// ordered by inclusion. subbasis[a] is the set of point positions lying in
/// X_a; generators[a] is the position of the least point of X_a.
struct FiniteFspace {
  std::vector<std::string> labels;
  std::vector<Subset> points;
  std::vector<Subset> subbasis;
  std::vector<std::size_t> generators;

  std::size_t size() const noexcept { return points.size(); }
  std::size_t index_count() const noexcept { return labels.size(); }

  bool below(std::size_t p, std::size_t q) const { return is_subset(points[p], points[q]); }

  std::optional<std::size_t> find_point(Subset s) const {
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p] == s) return p;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> find_subbasic(Subset s) const {
    for (std::size_t a = 0; a < subbasis.size(); ++a) {
      if (subbasis[a] == s) return a;
    }
    return std::nullopt;
  }

  Subset complement(std::size_t a) const { return full_set(size()) & ~subbasis[a]; }

  std::string point_name(std::size_t p) const { return format_subset(points[p], labels); }
};

namespace detail {

inline FiniteFspace space_from_points(const AlgebraTable& alg, std::vector<Subset> pts,
                                      const std::vector<Subset>& principal) {
  if (pts.size() > max_subset_width) throw usage_error("too many points for a finite Fspace");
  FiniteFspace fs;
  fs.labels = alg.names();
  fs.points = std::move(pts);
  for (std::size_t a = 0; a < alg.size(); ++a) {
    Subset s = 0;
    for (std::size_t p = 0; p < fs.size(); ++p) {
      if (contains(fs.points[p], a)) s |= singleton(p);
    }
    fs.subbasis.push_back(s);
    const auto gen = fs.find_point(principal[a]);
    if (!gen) throw std::logic_error("principal set of " + alg.name(a) + " is not a point");
    fs.generators.push_back(*gen);
  }
  return fs;
}

}  // namespace detail

/// Points: the empty set followed by every filter, by bitmask. The empty
/// point is the glb of filters with empty intersection and the preimage of a
/// filter under a map that misses it.
inline FiniteFspace filter_space(const AlgebraTable& alg) {
  std::vector<Subset> pts{0};
  for (const auto& f : filters(alg)) pts.push_back(f.members);
  const InducedOrder order = induced_order(alg, OrderKind::meet);
  std::vector<Subset> principal;
  for (std::size_t a = 0; a < alg.size(); ++a) principal.push_back(order.up_set(a));
  return detail::space_from_points(alg, std::move(pts), principal);
}

/// Points: the empty set followed by every ideal, by bitmask.
inline FiniteFspace ideal_space(const AlgebraTable& alg) {
  std::vector<Subset> pts{0};
  for (const auto& i : ideals(alg)) pts.push_back(i.members);
  const InducedOrder order = induced_order(alg, OrderKind::join);
  std::vector<Subset> principal;
  for (std::size_t a = 0; a < alg.size(); ++a) principal.push_back(order.down_set(a));
  return detail::space_from_points(alg, std::move(pts), principal);
}

/// Clauses, in order: (1) point set closed under binary intersection with a
/// greatest point; (2) each X_a is the principal up-set of its generator and
/// the subbasis separates points; (3) each point is the least upper bound of
/// the generators below it; (4) the subbasis is closed under intersection.
inline CheckResult check_fspace(const FiniteFspace& fs) {
  const std::size_t np = fs.size();
  const std::size_t k = fs.index_count();
  if (np == 0) return CheckResult::fail("fspace(0) non-empty", {});
  if (fs.subbasis.size() != k || fs.generators.size() != k) return CheckResult::fail("fspace(0) shape", {});
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (fs.points[p] == fs.points[q]) return CheckResult::fail("fspace(0) distinct points", {q, p});
    }
  }

  bool has_top = false;
  for (std::size_t t = 0; t < np && !has_top; ++t) {
    bool top = true;
    for (std::size_t p = 0; p < np; ++p) top = top && fs.below(p, t);
    has_top = top;
  }
  if (!has_top) return CheckResult::fail("fspace(1) greatest point", {});
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = p + 1; q < np; ++q) {
      if (!fs.find_point(fs.points[p] & fs.points[q])) return CheckResult::fail("fspace(1) glb", {p, q});
    }
  }

  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t g = fs.generators[a];
    if (g >= np) return CheckResult::fail("fspace(2) generator", {a});
    Subset up = 0;
    for (std::size_t p = 0; p < np; ++p) {
      if (fs.below(g, p)) up |= singleton(p);
    }
    if (fs.subbasis[a] != up) return CheckResult::fail("fspace(2) principal", {a});
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      if (fs.below(p, q)) continue;
      bool separated = false;
      for (std::size_t a = 0; a < k && !separated; ++a) {
        separated = contains(fs.subbasis[a], p) && !contains(fs.subbasis[a], q);
      }
      if (!separated) return CheckResult::fail("fspace(2) separation", {p, q});
    }
  }

  for (std::size_t p = 0; p < np; ++p) {
    std::vector<std::size_t> gens;
    for (std::size_t a = 0; a < k; ++a) {
      if (fs.below(fs.generators[a], p)) gens.push_back(fs.generators[a]);
    }
    for (std::size_t q = 0; q < np; ++q) {
      bool upper = true;
      for (std::size_t g : gens) upper = upper && fs.below(g, q);
      if (upper && !fs.below(p, q)) return CheckResult::fail("fspace(3) join-dense", {p, q});
    }
  }

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!fs.find_subbasic(fs.subbasis[a] & fs.subbasis[b])) {
        return CheckResult::fail("fspace(4) subbasis intersection", {a, b});
      }
    }
  }
  return CheckResult::pass();
}

/// <X, rho, Y>, optionally with star and 0-bar. rho[a] = b means
/// rho(X_a) = complement of Y_b; star[b] = c means (complement of Y_b)* = X_c;
/// bottom = b means 0-bar is the complement of Y_b.
struct TwoSpace {
  FiniteFspace left;
  FiniteFspace right;
  std::vector<std::size_t> rho;
  std::optional<std::vector<std::size_t>> star;
  std::optional<std::size_t> bottom;

  bool has_star() const noexcept { return star.has_value(); }
  std::size_t index_count() const noexcept { return left.index_count(); }
};

enum class TwoSpaceGrade { plain, star, involutive };

inline TwoSpace build_2space(const AlgebraTable& alg) {
  if (!is_bisemilattice(alg)) throw usage_error("2space construction needs a bisemilattice");
  TwoSpace ts{filter_space(alg), ideal_space(alg), {}, std::nullopt, std::nullopt};
  for (std::size_t a = 0; a < alg.size(); ++a) ts.rho.push_back(a);
  return ts;
}

inline TwoSpace build_2space_star(const AlgebraTable& alg) {
  if (!alg.signature().includes(Signature::full())) {
    throw usage_error("2space* construction needs neg, zero and one");
  }
  TwoSpace ts = build_2space(alg);
  ts.star.emplace();
  for (std::size_t a = 0; a < alg.size(); ++a) ts.star->push_back(alg.neg(a));
  ts.bottom = alg.zero();
  return ts;
}

/// The families X* and complements of Y* seen as a set algebra with theta = rho.
inline SetAlgebra set_view(const TwoSpace& ts) {
  SetAlgebra sa;
  sa.labels = ts.left.labels;
  sa.x = ts.left.subbasis;
  for (std::size_t b = 0; b < ts.right.index_count(); ++b) sa.y.push_back(ts.right.complement(b));
  sa.theta = ts.rho;
  sa.star = ts.star;
  sa.bottom_y = ts.bottom;
  return sa;
}

namespace detail {

inline CheckResult prefixed(const char* prefix, CheckResult r) {
  if (!r) r.law = std::string(prefix) + r.law;
  return r;
}

}  // namespace detail

inline CheckResult check_2space(const TwoSpace& ts) {
  if (auto r = check_fspace(ts.left); !r) return detail::prefixed("left ", r);
  if (auto r = check_fspace(ts.right); !r) return detail::prefixed("right ", r);
  if (ts.right.index_count() != ts.left.index_count()) return CheckResult::fail("index sets differ", {});
  const SetAlgebra sa = set_view(ts);
  if (auto r = check_structure(sa); !r) return r;
  if (auto r = check_condition_bal1(sa); !r) return r;
  return check_condition_un(sa);
}

/// The involutive grade adds rho(H meet (rho H)*) contained in rho(H meet K).
inline CheckResult check_2space_star(const TwoSpace& ts, TwoSpaceGrade grade = TwoSpaceGrade::star) {
  if (auto r = check_2space(ts); !r) return r;
  if (!ts.star || !ts.bottom) return CheckResult::fail("star and 0-bar present", {});
  const SetAlgebra sa = set_view(ts);
  if (auto r = check_closure(sa); !r) return r;
  if (auto r = check_star(sa); !r) return r;
  if (grade == TwoSpaceGrade::involutive) return check_condition_hey(sa);
  return CheckResult::pass();
}

/// rho(H meet (rho K)*) contained in rho(H meet K), with K independent of H.
inline CheckResult check_condition_last_two_variable(const TwoSpace& ts) {
  const SetAlgebra sa = set_view(ts);
  if (!sa.star) throw usage_error("condition needs a star map");
  if (auto r = check_closure(sa); !r) return r;
  const detail::SetOps ops{sa};
  const std::size_t n = sa.size();
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      const Subset lhs = sa.y[sa.theta[ops.cap(h, (*sa.star)[sa.theta[k]])]];
      if (!is_subset(lhs, sa.y[sa.theta[ops.cap(h, k)]])) return CheckResult::fail("last", {h, k});
    }
  }
  return CheckResult::pass();
}

/// Universe X*, named by the index set; Z.W = Z meet W, Z+W = rho^-1(rho Z
/// union rho W), and with star: A-dagger = (rho A)*, bot = rho^-1(0-bar),
/// top = 0-bar*.
inline AlgebraTable algebra_of_2space(const TwoSpace& ts) { return derived_algebra(set_view(ts)); }

/// Pair of point maps psi : left points of the source -> left points of the
/// target, chi : right points of the source -> right points of the target.
struct TwoSpaceMorphism {
  std::vector<std::size_t> psi;
  std::vector<std::size_t> chi;
  friend bool operator==(const TwoSpaceMorphism&, const TwoSpaceMorphism&) = default;
};

// (m2 after m1)
inline TwoSpaceMorphism compose(const TwoSpaceMorphism& m2, const TwoSpaceMorphism& m1) {
  TwoSpaceMorphism out;
  for (std::size_t p : m1.psi) out.psi.push_back(m2.psi.at(p));
  for (std::size_t p : m1.chi) out.chi.push_back(m2.chi.at(p));
  return out;
}

inline TwoSpaceMorphism identity_morphism(const TwoSpace& ts) {
  TwoSpaceMorphism m;
  for (std::size_t p = 0; p < ts.left.size(); ++p) m.psi.push_back(p);
  for (std::size_t p = 0; p < ts.right.size(); ++p) m.chi.push_back(p);
  return m;
}

namespace detail {

inline Subset preimage(const std::vector<std::size_t>& map, Subset target) {
  Subset out = 0;
  for (std::size_t p = 0; p < map.size(); ++p) {
    if (contains(target, map[p])) out |= singleton(p);
  }
  return out;
}

inline std::vector<std::size_t> preimage_points(const FiniteFspace& from, const FiniteFspace& to,
                                                const Homomorphism& f) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < from.size(); ++p) {
    Subset pre = 0;
    for (std::size_t c = 0; c < to.index_count(); ++c) {
      if (contains(from.points[p], f(c))) pre |= singleton(c);
    }
    const auto q = to.find_point(pre);
    if (!q) {
      throw std::logic_error("preimage " + format_subset(pre, to.labels) + " of " + from.point_name(p) +
                             " is not a point");
    }
    out.push_back(*q);
  }
  return out;
}

// psi-preimage of each subbasic set of the target, as a subbasic index of
// the source, or nullopt if some preimage is not subbasic.
inline std::optional<std::vector<std::size_t>> pulled_indices(const FiniteFspace& src, const FiniteFspace& dst,
                                                              const std::vector<std::size_t>& map,
                                                              std::size_t& bad) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dst.index_count(); ++c) {
    const auto a = src.find_subbasic(preimage(map, dst.subbasis[c]));
    if (!a) {
      bad = c;
      return std::nullopt;
    }
    out.push_back(*a);
  }
  return out;
}

inline std::size_t inverse_at(const std::vector<std::size_t>& perm, std::size_t v) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] == v) return i;
  }
  throw std::logic_error("map is not onto");
}

}  // namespace detail

/// S(f) = (f^-1, f^-1) : S(M) -> S(L) for f : L -> M. The spaces must be
/// built from L and M; f is checked to be a homomorphism between their
/// reconstructed algebras.
inline TwoSpaceMorphism dualize_hom(const TwoSpace& sL, const TwoSpace& sM, const Homomorphism& f) {
  if (f.size() != sL.index_count()) throw usage_error("map size does not match the source index set");
  for (Elem e : f.image) {
    if (e >= sM.index_count()) throw usage_error("map value out of range");
  }
  TwoSpaceMorphism m;
  m.psi = detail::preimage_points(sM.left, sL.left, f);
  m.chi = detail::preimage_points(sM.right, sL.right, f);
  return m;
}

/// The clauses, in order: maps total; psi and chi preserve binary glbs and
/// the greatest point; psi^-1 maps Z* into X* and chi^-1 maps the
/// complements of W* into those of Y*; psi^-1 = rho^-1 . chi^-1 . sigma on
/// Z*; with star on both sides, chi^-1(A^star^-1) = (psi^-1 A)^star^-1.
inline CheckResult check_morphism(const TwoSpace& src, const TwoSpace& dst, const TwoSpaceMorphism& m) {
  if (m.psi.size() != src.left.size() || m.chi.size() != src.right.size()) {
    return CheckResult::fail("morphism total", {});
  }
  for (std::size_t p : m.psi) {
    if (p >= dst.left.size()) return CheckResult::fail("psi in range", {});
  }
  for (std::size_t p : m.chi) {
    if (p >= dst.right.size()) return CheckResult::fail("chi in range", {});
  }
  auto preserves_glbs = [](const FiniteFspace& a, const FiniteFspace& b, const std::vector<std::size_t>& map,
                           const char* law) {
    for (std::size_t p = 0; p < a.size(); ++p) {
      for (std::size_t q = p; q < a.size(); ++q) {
        const auto pq = a.find_point(a.points[p] & a.points[q]);
        const auto img = b.find_point(b.points[map[p]] & b.points[map[q]]);
        if (!pq || !img || map[*pq] != *img) return CheckResult::fail(law, {p, q});
      }
    }
    std::size_t top = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (is_subset(a.points[top], a.points[p])) top = p;
    }
    std::size_t btop = 0;
    for (std::size_t p = 0; p < b.size(); ++p) {
      if (is_subset(b.points[btop], b.points[p])) btop = p;
    }
    if (map[top] != btop) return CheckResult::fail(law, {top});
    return CheckResult::pass();
  };
  if (auto r = preserves_glbs(src.left, dst.left, m.psi, "psi preserves glbs"); !r) return r;
  if (auto r = preserves_glbs(src.right, dst.right, m.chi, "chi preserves glbs"); !r) return r;

  std::size_t bad = 0;
  const auto pulled_x = detail::pulled_indices(src.left, dst.left, m.psi, bad);
  if (!pulled_x) return CheckResult::fail("psi^-1 maps Z* into X*", {bad});
  const auto pulled_y = detail::pulled_indices(src.right, dst.right, m.chi, bad);
  if (!pulled_y) return CheckResult::fail("chi^-1 maps W* into Y*", {bad});

  for (std::size_t c = 0; c < dst.index_count(); ++c) {
    const std::size_t via = detail::inverse_at(src.rho, (*pulled_y)[dst.rho[c]]);
    if ((*pulled_x)[c] != via) return CheckResult::fail("diagram psi^-1 = rho^-1 chi^-1 sigma", {c});
  }

  if (src.star && dst.star) {
    for (std::size_t c = 0; c < dst.index_count(); ++c) {
      const std::size_t lhs = (*pulled_y)[detail::inverse_at(*dst.star, c)];
      const std::size_t rhs = detail::inverse_at(*src.star, (*pulled_x)[c]);
      if (lhs != rhs) return CheckResult::fail("star condition", {c});
    }
  }
  return CheckResult::pass();
}

/// For m : S(M) -> S(L), the unique f : L -> M with psi^-1(X_a) = X_f(a)
/// on the subbasis of S(L)'s filter space. Throws verification_error with
/// the offending index if the preimages are not subbasic, if chi disagrees,
/// if m is not the dual of f, or if f is not a homomorphism of the
/// reconstructed algebras.
inline Homomorphism recover_hom(const TwoSpace& src, const TwoSpace& dst, const TwoSpaceMorphism& m) {
  if (auto r = check_morphism(src, dst, m); !r) {
    throw verification_error("not a 2space morphism: " + describe(r, {}));
  }
  std::size_t bad = 0;
  const auto pulled_x = detail::pulled_indices(src.left, dst.left, m.psi, bad);
  if (!pulled_x) throw verification_error("psi^-1 of X_" + dst.left.labels[bad] + " is not subbasic");
  Homomorphism f;
  for (std::size_t a : *pulled_x) f.image.push_back(static_cast<Elem>(a));

  const auto pulled_y = detail::pulled_indices(src.right, dst.right, m.chi, bad);
  for (std::size_t c = 0; c < dst.index_count(); ++c) {
    if ((*pulled_y)[c] != f(c)) throw verification_error("chi disagrees with psi at " + dst.left.labels[c]);
  }
  const TwoSpaceMorphism dual = dualize_hom(dst, src, f);
  for (std::size_t p = 0; p < m.psi.size(); ++p) {
    if (m.psi[p] != dual.psi[p]) {
      throw verification_error("psi is not a preimage map at point " + src.left.point_name(p));
    }
  }
  for (std::size_t p = 0; p < m.chi.size(); ++p) {
    if (m.chi[p] != dual.chi[p]) {
      throw verification_error("chi is not a preimage map at point " + src.right.point_name(p));
    }
  }
  const AlgebraTable from = algebra_of_2space(dst);
  const AlgebraTable to = algebra_of_2space(src);
  if (!is_homomorphism(from, to, f, from.signature().intersect(to.signature()))) {
    throw verification_error("recovered map is not a homomorphism");
  }
  return f;
}

/// Two 2spaces over the same index set are isomorphic when points match by
/// subbasis membership, the matching is an order isomorphism on both sides,
/// and rho, star and 0-bar agree index-wise.
inline CheckResult check_2space_isomorphic(const TwoSpace& a, const TwoSpace& b) {
  if (a.index_count() != b.index_count()) return CheckResult::fail("index sets differ", {});
  auto match = [](const FiniteFspace& s, const FiniteFspace& t, const char* law) {
    if (s.size() != t.size()) return CheckResult::fail(law, {});
    auto signature = [](const FiniteFspace& fs, std::size_t p) {
      Subset sig = 0;
      for (std::size_t c = 0; c < fs.index_count(); ++c) {
        if (contains(fs.subbasis[c], p)) sig |= singleton(c);
      }
      return sig;
    };
    std::vector<std::size_t> to(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
      std::optional<std::size_t> hit;
      for (std::size_t q = 0; q < t.size(); ++q) {
        if (signature(s, p) == signature(t, q)) hit = q;
      }
      if (!hit) return CheckResult::fail(law, {p});
      to[p] = *hit;
    }
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (std::size_t q = 0; q < s.size(); ++q) {
        if (s.below(p, q) != t.below(to[p], to[q])) return CheckResult::fail(law, {p, q});
      }
    }
    return CheckResult::pass();
  };
  if (auto r = match(a.left, b.left, "left points match"); !r) return r;
  if (auto r = match(a.right, b.right, "right points match"); !r) return r;
  if (a.rho != b.rho) return CheckResult::fail("rho agrees", {});
  if (a.star != b.star) return CheckResult::fail("star agrees", {});
  if (a.bottom != b.bottom) return CheckResult::fail("0-bar agrees", {});
  return CheckResult::pass();
}

}  // namespace bisem

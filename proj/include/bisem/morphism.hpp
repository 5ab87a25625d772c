#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"

namespace bisem {

/// A map between universes, stored as the image of each source element.
/// Whether it preserves operations is a property of (source, target,
/// signature), checked by is_homomorphism.
struct Homomorphism {
  std::vector<Elem> image;

  Elem operator()(std::size_t a) const { return image.at(a); }
  std::size_t size() const noexcept { return image.size(); }

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
  friend auto operator<=>(const Homomorphism&, const Homomorphism&) = default;
};

inline Homomorphism identity_map(std::size_t n) {
  Homomorphism h;
  for (std::size_t i = 0; i < n; ++i) h.image.push_back(static_cast<Elem>(i));
  return h;
}

// (g . f)(a) = g(f(a))
inline Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  Homomorphism out;
  out.image.reserve(f.size());
  for (Elem e : f.image) out.image.push_back(g(e));
  return out;
}

inline std::string format_map(const AlgebraTable& src, const AlgebraTable& dst, const Homomorphism& f) {
  std::string out;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (a) out += ' ';
    out += src.name(a) + "->" + dst.name(f(a));
  }
  return out;
}

inline bool is_homomorphism(const AlgebraTable& src, const AlgebraTable& dst, const Homomorphism& f,
                            const Signature& sig) {
  const std::size_t n = src.size();
  if (f.size() != n) return false;
  for (Elem e : f.image) {
    if (e >= dst.size()) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (f(src.meet(a, b)) != dst.meet(f(a), f(b))) return false;
      if (f(src.join(a, b)) != dst.join(f(a), f(b))) return false;
    }
    if (sig.neg && f(src.neg(a)) != dst.neg(f(a))) return false;
  }
  if (sig.zero && f(src.zero()) != dst.zero()) return false;
  if (sig.one && f(src.one()) != dst.one()) return false;
  return true;
}

namespace detail {

// Depth-first search over image vectors in lexicographic order. Partial
// assignments are pruned as soon as an operation among assigned elements
// disagrees. `visit` returns false to stop the search.
template <typename Visit>
void search_maps(const AlgebraTable& src, const AlgebraTable& dst, const Signature& sig, bool injective,
                 Visit&& visit) {
  const std::size_t n = src.size();
  const std::size_t m = dst.size();
  std::vector<int> img(n, -1);
  std::vector<bool> used(m, false);

  // Elements are assigned in index order, so after step k exactly 0..k are
  // assigned. Check each equation once, at the step that completes it.
  auto consistent = [&](std::size_t k) {
    auto f = [&](std::size_t e) { return static_cast<std::size_t>(img[e]); };
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = 0; b <= k; ++b) {
        const std::size_t mab = src.meet(a, b);
        if (mab <= k && (a == k || b == k || mab == k) && f(mab) != dst.meet(f(a), f(b))) return false;
        const std::size_t jab = src.join(a, b);
        if (jab <= k && (a == k || b == k || jab == k) && f(jab) != dst.join(f(a), f(b))) return false;
      }
      if (sig.neg) {
        const std::size_t na = src.neg(a);
        if (na <= k && (a == k || na == k) && f(na) != dst.neg(f(a))) return false;
      }
    }
    if (sig.zero && src.zero() == k && f(k) != dst.zero()) return false;
    if (sig.one && src.one() == k && f(k) != dst.one()) return false;
    return true;
  };

  bool stop = false;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == n) {
      Homomorphism h;
      h.image.reserve(n);
      for (int v : img) h.image.push_back(static_cast<Elem>(v));
      if (!visit(h)) stop = true;
      return;
    }
    for (std::size_t v = 0; v < m && !stop; ++v) {
      if (injective && used[v]) continue;
      img[k] = static_cast<int>(v);
      if (consistent(k)) {
        used[v] = true;
        self(self, k + 1);
        used[v] = false;
      }
      img[k] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// All maps src -> dst preserving `sig`, ordered lexicographically by image
/// vector. Both algebras must carry every symbol of `sig`.
inline std::vector<Homomorphism> enumerate_homomorphisms(const AlgebraTable& src, const AlgebraTable& dst,
                                                         const Signature& sig) {
  if (!src.signature().includes(sig) || !dst.signature().includes(sig)) {
    throw usage_error("signature mismatch: " + sig.to_string() + " is not shared by " +
                      src.signature().to_string() + " and " + dst.signature().to_string());
  }
  std::vector<Homomorphism> out;
  detail::search_maps(src, dst, sig, false, [&](const Homomorphism& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

/// The lexicographically first isomorphism a -> b preserving every symbol
/// of a's signature, if one exists. Algebras with different signatures or
/// sizes are never isomorphic.
inline std::optional<Homomorphism> find_isomorphism(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.size() != b.size() || a.signature() != b.signature()) return std::nullopt;
  std::optional<Homomorphism> found;
  detail::search_maps(a, b, a.signature(), true, [&](const Homomorphism& h) {
    found = h;
    return false;
  });
  return found;
}

inline Homomorphism inverse(const Homomorphism& bijection) {
  Homomorphism out;
  out.image.assign(bijection.size(), 0);
  for (std::size_t a = 0; a < bijection.size(); ++a) out.image.at(bijection(a)) = static_cast<Elem>(a);
  return out;
}

}  // namespace bisem

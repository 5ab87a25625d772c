#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/order.hpp"
#include "bisem/twospace.hpp"

namespace bisem {

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Line-oriented report: a header (verb, inputs with digests, verdict)
/// followed by key/value lines in insertion order.
struct Report {
  std::string verb;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> fields;

  void input(std::string name, std::string_view bytes) {
    inputs.emplace_back(std::move(name), "fnv1a64:" + hex64(fnv1a64(bytes)));
  }
  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

  std::string render() const {
    std::string out = "verb " + verb + "\n";
    for (const auto& [name, digest] : inputs) out += "input " + name + " " + digest + "\n";
    out += "verdict " + verdict + "\n";
    for (const auto& [k, v] : fields) out += v.empty() ? k + "\n" : k + " " + v + "\n";
    return out;
  }
};

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// Covering relation of the chosen order, edges from lower to upper.
inline std::string hasse_dot(const AlgebraTable& alg, OrderKind kind) {
  const InducedOrder order = induced_order(alg, kind);
  std::string out = "digraph " + std::string(to_string(kind)) + " {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < alg.size(); ++a) {
    out += "  n" + std::to_string(a) + " [label=" + detail::dot_quote(alg.name(a)) + "];\n";
  }
  for (const auto& [lo, hi] : order.covering_pairs()) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  return out + "}\n";
}

// Inclusion orders of both point sets; each point lists the indices it generates.
inline std::string space_dot(const TwoSpace& ts) {
  std::string out = "digraph twospace {\n  rankdir=BT;\n";
  auto cluster = [&](const FiniteFspace& fs, const char* prefix, const char* title) {
    out += std::string("  subgraph cluster_") + prefix + " {\n    label=" + detail::dot_quote(title) + ";\n";
    for (std::size_t p = 0; p < fs.size(); ++p) {
      std::string label = fs.point_name(p);
      std::string gens;
      for (std::size_t a = 0; a < fs.index_count(); ++a) {
        if (fs.generators[a] == p) gens += (gens.empty() ? "" : " ") + fs.labels[a];
      }
      if (!gens.empty()) label += "\ngenerates " + gens;
      out += "    " + std::string(prefix) + std::to_string(p) + " [label=" + detail::dot_quote(label) + "];\n";
    }
    for (std::size_t p = 0; p < fs.size(); ++p) {
      for (std::size_t q = 0; q < fs.size(); ++q) {
        if (p == q || !fs.below(p, q)) continue;
        bool cover = true;
        for (std::size_t r = 0; r < fs.size() && cover; ++r) {
          cover = r == p || r == q || !(fs.below(p, r) && fs.below(r, q));
        }
        if (cover) {
          out += "    " + std::string(prefix) + std::to_string(p) + " -> " + prefix + std::to_string(q) + ";\n";
        }
      }
    }
    out += "  }\n";
  };
  cluster(ts.left, "x", "filters");
  cluster(ts.right, "y", "ideals");
  return out + "}\n";
}

}  // namespace bisem

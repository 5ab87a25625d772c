#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"
#include "bisem/morphism.hpp"
#include "bisem/plonka.hpp"

namespace bisem {

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping '#' comments and blank lines.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

/// Parses the .balg text format:
///   elements t1 ... tn
///   meet            (followed by n rows of n tokens)
///   join            (followed by n rows of n tokens)
///   neg t1 ... tn   (optional)
///   zero t          (optional)
///   one t           (optional)
/// '#' starts a comment. Errors carry the offending line number.
inline AlgebraTable parse_balg(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  std::optional<std::vector<std::string>> universe;
  std::optional<std::vector<Elem>> meet, join, neg;
  std::optional<Elem> zero, one;
  std::map<std::string, std::size_t> seen;

  auto lookup = [&](const std::string& token, std::size_t line) {
    for (std::size_t i = 0; i < universe->size(); ++i) {
      if ((*universe)[i] == token) return static_cast<Elem>(i);
    }
    throw parse_error(line, "unknown token '" + token + "'");
  };

  std::size_t k = 0;
  while (k < lines.size()) {
    const auto& line = lines[k];
    const std::string& key = line.tokens.front();
    if (key != "elements" && key != "meet" && key != "join" && key != "neg" && key != "zero" && key != "one") {
      throw parse_error(line.number, "unknown section '" + key + "'");
    }
    if (const auto it = seen.find(key); it != seen.end()) {
      throw parse_error(line.number, "duplicate section '" + key + "' (first on line " +
                                         std::to_string(it->second) + ")");
    }
    seen[key] = line.number;
    if (key == "elements") {
      if (line.tokens.size() < 2) throw parse_error(line.number, "elements needs at least one token");
      std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
      for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (names[i] == names[j]) throw parse_error(line.number, "duplicate element '" + names[i] + "'");
        }
      }
      if (names.size() > max_universe) throw parse_error(line.number, "too many elements");
      universe = std::move(names);
      ++k;
      continue;
    }
    if (!universe) throw parse_error(line.number, "'" + key + "' before 'elements'");
    const std::size_t n = universe->size();
    if (key == "meet" || key == "join") {
      if (line.tokens.size() != 1) throw parse_error(line.number, "'" + key + "' takes no arguments");
      std::vector<Elem> table;
      for (std::size_t r = 0; r < n; ++r) {
        ++k;
        if (k >= lines.size()) throw parse_error(line.number, key + " table has " + std::to_string(r) + " rows, expected " + std::to_string(n));
        const auto& row = lines[k];
        if (row.tokens.size() != n) {
          throw parse_error(row.number, key + " row has " + std::to_string(row.tokens.size()) +
                                            " tokens, expected " + std::to_string(n));
        }
        for (const auto& t : row.tokens) table.push_back(lookup(t, row.number));
      }
      (key == "meet" ? meet : join) = std::move(table);
      ++k;
      continue;
    }
    if (key == "neg") {
      if (line.tokens.size() != n + 1) {
        throw parse_error(line.number, "neg has " + std::to_string(line.tokens.size() - 1) +
                                           " tokens, expected " + std::to_string(n));
      }
      std::vector<Elem> image;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) image.push_back(lookup(line.tokens[i], line.number));
      neg = std::move(image);
    } else {
      if (line.tokens.size() != 2) throw parse_error(line.number, "'" + key + "' takes exactly one token");
      (key == "zero" ? zero : one) = lookup(line.tokens[1], line.number);
    }
    ++k;
  }
  if (!universe) throw parse_error(0, "missing 'elements'");
  if (!meet) throw parse_error(0, "missing 'meet' table");
  if (!join) throw parse_error(0, "missing 'join' table");
  try {
    return AlgebraTable(std::move(*universe), std::move(*meet), std::move(*join), std::move(neg), zero, one);
  } catch (const malformed_table& e) {
    throw parse_error(seen.count("neg") ? seen["neg"] : 0, e.what());
  }
}

/// Columns are padded to the widest token; parse_balg(print_balg(a)) == a.
inline std::string print_balg(const AlgebraTable& alg) {
  const std::size_t n = alg.size();
  std::size_t width = 0;
  for (const auto& s : alg.names()) width = std::max(width, s.size());
  auto cell = [&](std::size_t e) {
    std::string s = alg.name(e);
    s.resize(width, ' ');
    return s;
  };
  auto row = [&](auto&& value) {
    std::string out;
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += j + 1 < n ? cell(value(j)) : alg.name(value(j));
    }
    return out + "\n";
  };
  std::string out = "elements";
  for (const auto& s : alg.names()) out += " " + s;
  out += "\nmeet\n";
  for (std::size_t i = 0; i < n; ++i) out += row([&](std::size_t j) { return alg.meet(i, j); });
  out += "join\n";
  for (std::size_t i = 0; i < n; ++i) out += row([&](std::size_t j) { return alg.join(i, j); });
  if (alg.has_neg()) {
    out += "neg";
    for (std::size_t i = 0; i < n; ++i) out += " " + alg.name(alg.neg(i));
    out += "\n";
  }
  if (alg.has_zero()) out += "zero " + alg.name(alg.zero()) + "\n";
  if (alg.has_one()) out += "one " + alg.name(alg.one()) + "\n";
  return out;
}

inline AlgebraTable load_balg(const std::filesystem::path& path) { return parse_balg(detail::read_file(path)); }

/// Parsed Płonka spec file:
///   index <file>
///   component <index-token> <file>
///   link <i> <j>: t1->u1 t2->u2 ...
/// Paths are kept as written; load_plonka resolves them.
struct PlonkaSpecDoc {
  struct LinkLine {
    std::size_t line = 0;
    std::string from;
    std::string to;
    std::vector<std::pair<std::string, std::string>> pairs;
  };
  std::string index;
  std::vector<std::pair<std::string, std::string>> components;
  std::vector<LinkLine> links;
};

inline PlonkaSpecDoc parse_plonka_spec(std::string_view text) {
  PlonkaSpecDoc doc;
  bool have_index = false;
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (t[0] == "index") {
      if (have_index) throw parse_error(line.number, "duplicate 'index'");
      if (t.size() != 2) throw parse_error(line.number, "'index' takes one path");
      doc.index = t[1];
      have_index = true;
    } else if (t[0] == "component") {
      if (t.size() != 3) throw parse_error(line.number, "'component' takes an index token and a path");
      for (const auto& [tok, path] : doc.components) {
        if (tok == t[1]) throw parse_error(line.number, "duplicate component for '" + tok + "'");
      }
      doc.components.emplace_back(t[1], t[2]);
    } else if (t[0] == "link") {
      if (t.size() < 3 || t[2].empty() || t[2].back() != ':') {
        throw parse_error(line.number, "expected 'link <i> <j>: a->b ...'");
      }
      PlonkaSpecDoc::LinkLine link{line.number, t[1], t[2].substr(0, t[2].size() - 1), {}};
      for (std::size_t i = 3; i < t.size(); ++i) {
        const auto arrow = t[i].find("->");
        if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= t[i].size()) {
          throw parse_error(line.number, "malformed map entry '" + t[i] + "'");
        }
        link.pairs.emplace_back(t[i].substr(0, arrow), t[i].substr(arrow + 2));
      }
      doc.links.push_back(std::move(link));
    } else {
      throw parse_error(line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!have_index) throw parse_error(0, "missing 'index'");
  return doc;
}

struct PlonkaInput {
  AlgebraTable index;
  std::vector<AlgebraTable> components;
  std::vector<PlonkaLink> links;
};

/// Resolves a parsed spec against `base` (the directory of the .plonka file). Links
/// between comparable indices that are not given are filled in by
/// composition when a chain of given links determines them.
inline PlonkaInput load_plonka(const PlonkaSpecDoc& doc, const std::filesystem::path& base) {
  PlonkaInput in{load_balg(base / doc.index), {}, {}};
  const std::size_t k = in.index.size();
  std::vector<std::optional<AlgebraTable>> comps(k);
  for (const auto& [tok, path] : doc.components) {
    const auto i = in.index.index_of(tok);
    if (!i) throw usage_error("component for unknown index element '" + tok + "'");
    comps[*i] = load_balg(base / path);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!comps[i]) throw usage_error("no component for index element '" + in.index.name(i) + "'");
    in.components.push_back(*comps[i]);
  }
  std::map<std::pair<std::size_t, std::size_t>, Homomorphism> given;
  for (const auto& link : doc.links) {
    const auto i = in.index.index_of(link.from);
    const auto j = in.index.index_of(link.to);
    if (!i || !j) throw parse_error(link.line, "link between unknown index elements");
    const auto& src = in.components[*i];
    const auto& dst = in.components[*j];
    Homomorphism h;
    h.image.assign(src.size(), 0);
    std::vector<bool> hit(src.size(), false);
    for (const auto& [a, b] : link.pairs) {
      const auto x = src.index_of(a);
      const auto y = dst.index_of(b);
      if (!x) throw parse_error(link.line, "unknown source token '" + a + "'");
      if (!y) throw parse_error(link.line, "unknown target token '" + b + "'");
      if (hit[*x]) throw parse_error(link.line, "token '" + a + "' mapped twice");
      hit[*x] = true;
      h.image[*x] = *y;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw parse_error(link.line, "link map is not total");
    }
    if (!given.emplace(std::pair{*i, *j}, h).second) throw parse_error(link.line, "duplicate link");
  }
  auto leq = [&](std::size_t i, std::size_t j) { return in.index.join(i, j) == j; };
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i == m || m == j || i == j || !leq(i, m) || !leq(m, j) || given.count({i, j})) continue;
          if (given.count({i, m}) && given.count({m, j})) {
            given[{i, j}] = compose(given.at({m, j}), given.at({i, m}));
            grew = true;
          }
        }
      }
    }
  }
  for (const auto& [key, map] : given) in.links.push_back({key.first, key.second, map});
  return in;
}

inline PlonkaInput load_plonka(const std::filesystem::path& spec_path) {
  return load_plonka(parse_plonka_spec(detail::read_file(spec_path)), spec_path.parent_path());
}

}  // namespace bisem

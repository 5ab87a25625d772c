#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"

namespace bisem {

inline std::vector<std::string> builtin_names() {
  return {"weak_kleene_3", "strong_kleene_3", "bool_2", "lattice_1"};
}

/// The named algebras shipped with the library. The three-element ones use
/// the tokens 0, h, 1 (h standing for one half), in that universe order.
inline AlgebraTable builtin(std::string_view name) {
  if (name == "weak_kleene_3") {
    // weak Kleene tables: one half is absorbing for both operations
    return AlgebraTable::from_rows({"0", "h", "1"},
                                   {{0, 1, 0}, {1, 1, 1}, {0, 1, 2}},
                                   {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}},
                                   std::vector<Elem>{2, 1, 0}, Elem{0}, Elem{2});
  }
  if (name == "strong_kleene_3") {
    // min / max on the chain 0 < h < 1
    return AlgebraTable::from_rows({"0", "h", "1"},
                                   {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                                   {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                                   std::vector<Elem>{2, 1, 0}, Elem{0}, Elem{2});
  }
  if (name == "bool_2") {
    return AlgebraTable::from_rows({"0", "1"}, {{0, 0}, {0, 1}}, {{0, 1}, {1, 1}},
                                   std::vector<Elem>{1, 0}, Elem{0}, Elem{1});
  }
  if (name == "lattice_1") {
    return AlgebraTable::from_rows({"e"}, {{0}}, {{0}});
  }
  throw usage_error("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace bisem

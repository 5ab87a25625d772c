#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/errors.hpp"

namespace bisem {

// Truth values; the numeric order matches element positions in the builtin
// three-element algebras (0, h, 1).
enum class Truth : std::uint8_t { f = 0, h = 1, t = 2 };

inline const char* to_string(Truth v) {
  switch (v) {
    case Truth::f: return "0";
    case Truth::h: return "h";
    case Truth::t: return "1";
  }
  return "?";
}

inline std::optional<Truth> parse_truth(std::string_view s) {
  if (s == "0") return Truth::f;
  if (s == "h" || s == "1/2") return Truth::h;
  if (s == "1") return Truth::t;
  return std::nullopt;
}

inline constexpr Truth all_truths[] = {Truth::f, Truth::h, Truth::t};

struct Formula {
  enum class Kind { var, conj, disj, neg, zero, one };

  Kind kind = Kind::zero;
  std::string name;
  std::vector<Formula> args;

  static Formula variable(std::string n) { return {Kind::var, std::move(n), {}}; }
  static Formula constant(bool value) { return {value ? Kind::one : Kind::zero, {}, {}}; }
  static Formula negation(Formula a) { return {Kind::neg, {}, {std::move(a)}}; }
  static Formula conjunction(Formula a, Formula b) { return {Kind::conj, {}, {std::move(a), std::move(b)}}; }
  static Formula disjunction(Formula a, Formula b) { return {Kind::disj, {}, {std::move(a), std::move(b)}}; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

inline void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::var) out.insert(f.name);
  for (const auto& a : f.args) collect_variables(a, out);
}

inline std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

inline bool is_constant_free(const Formula& f) {
  if (f.kind == Formula::Kind::zero || f.kind == Formula::Kind::one) return false;
  for (const auto& a : f.args) {
    if (!is_constant_free(a)) return false;
  }
  return true;
}

namespace detail {

inline int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::disj: return 1;
    case Formula::Kind::conj: return 2;
    default: return 3;
  }
}

// Recursive descent over: disj := conj ('|' conj)*, conj := unary ('&' unary)*,
// unary := '~' unary | atom, atom := '0' | '1' | var | '(' disj ')'.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = disj();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(0, "formula column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula disj() {
    Formula f = conj();
    while (eat('|')) f = Formula::disjunction(std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (eat('&')) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (eat('~')) return Formula::negation(unary());
    return atom();
  }

  Formula atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = disj();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Formula::constant(c == '1');
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                     (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
        ++pos_;
      }
      return Formula::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

// Prints with the fewest parentheses the grammar needs; parse(print(f)) = f.
inline std::string to_string(const Formula& f) {
  auto wrap = [](const Formula& sub, int min_prec, bool strict) {
    const int p = detail::precedence(sub);
    const bool paren = strict ? p <= min_prec : p < min_prec;
    return paren ? "(" + to_string(sub) + ")" : to_string(sub);
  };
  switch (f.kind) {
    case Formula::Kind::var: return f.name;
    case Formula::Kind::zero: return "0";
    case Formula::Kind::one: return "1";
    case Formula::Kind::neg: return "~" + wrap(f.args[0], 3, false);
    case Formula::Kind::conj: return wrap(f.args[0], 2, false) + " & " + wrap(f.args[1], 2, true);
    case Formula::Kind::disj: return wrap(f.args[0], 1, false) + " | " + wrap(f.args[1], 1, true);
  }
  return {};
}

enum class Matrix { weak, strong };

inline Truth matrix_neg(Truth a) {
  return a == Truth::h ? Truth::h : (a == Truth::t ? Truth::f : Truth::t);
}

// Weak tables: h is contagious, otherwise classical. Strong tables: min and
// max along 0 < h < 1.
inline Truth matrix_and(Matrix m, Truth a, Truth b) {
  if (m == Matrix::weak) {
    if (a == Truth::h || b == Truth::h) return Truth::h;
    return (a == Truth::t && b == Truth::t) ? Truth::t : Truth::f;
  }
  return a < b ? a : b;
}

inline Truth matrix_or(Matrix m, Truth a, Truth b) {
  if (m == Matrix::weak) {
    if (a == Truth::h || b == Truth::h) return Truth::h;
    return (a == Truth::t || b == Truth::t) ? Truth::t : Truth::f;
  }
  return a < b ? b : a;
}

using Valuation = std::map<std::string, Truth>;

inline std::string to_string(const Valuation& v) {
  std::string out;
  for (const auto& [name, value] : v) {
    if (!out.empty()) out += ',';
    out += name + "=" + to_string(value);
  }
  return out;
}

inline Truth evaluate(const Formula& f, const Valuation& v, Matrix m) {
  switch (f.kind) {
    case Formula::Kind::var: {
      const auto it = v.find(f.name);
      if (it == v.end()) throw usage_error("unbound variable " + f.name);
      return it->second;
    }
    case Formula::Kind::zero: return Truth::f;
    case Formula::Kind::one: return Truth::t;
    case Formula::Kind::neg: return matrix_neg(evaluate(f.args[0], v, m));
    case Formula::Kind::conj: return matrix_and(m, evaluate(f.args[0], v, m), evaluate(f.args[1], v, m));
    case Formula::Kind::disj: return matrix_or(m, evaluate(f.args[0], v, m), evaluate(f.args[1], v, m));
  }
  return Truth::f;
}

/// Term evaluation in an arbitrary algebra; constants and negation need the
/// corresponding symbols.
inline Elem evaluate_in(const AlgebraTable& alg, const Formula& f, const std::map<std::string, Elem>& v) {
  switch (f.kind) {
    case Formula::Kind::var: {
      const auto it = v.find(f.name);
      if (it == v.end()) throw usage_error("unbound variable " + f.name);
      return it->second;
    }
    case Formula::Kind::zero:
      if (!alg.has_zero()) throw usage_error("algebra has no zero");
      return alg.zero();
    case Formula::Kind::one:
      if (!alg.has_one()) throw usage_error("algebra has no one");
      return alg.one();
    case Formula::Kind::neg:
      if (!alg.has_neg()) throw usage_error("algebra has no negation");
      return alg.neg(evaluate_in(alg, f.args[0], v));
    case Formula::Kind::conj: return alg.meet(evaluate_in(alg, f.args[0], v), evaluate_in(alg, f.args[1], v));
    case Formula::Kind::disj: return alg.join(evaluate_in(alg, f.args[0], v), evaluate_in(alg, f.args[1], v));
  }
  return 0;
}

struct LogicSpec {
  std::string name;
  Matrix matrix = Matrix::weak;
  bool half_designated = false;

  bool designated(Truth v) const { return v == Truth::t || (half_designated && v == Truth::h); }
};

inline LogicSpec logic_b3() { return {"B3", Matrix::weak, false}; }
inline LogicSpec logic_pwk() { return {"PWK", Matrix::weak, true}; }
inline LogicSpec logic_k3() { return {"K3", Matrix::strong, false}; }
inline LogicSpec logic_p3() { return {"P3", Matrix::strong, true}; }

inline std::optional<LogicSpec> parse_logic(std::string_view s) {
  if (s == "b3") return logic_b3();
  if (s == "pwk") return logic_pwk();
  if (s == "k3") return logic_k3();
  if (s == "p3") return logic_p3();
  return std::nullopt;
}

/// Calls fn on every valuation of `vars` (sorted by name, values in the
/// order 0, h, 1, last variable fastest) until fn returns false.
template <typename Fn>
void for_each_valuation(const std::set<std::string>& vars, Fn&& fn) {
  const std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::size_t> digits(names.size(), 0);
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = all_truths[digits[i]];
    if (!fn(v)) return;
    std::size_t i = names.size();
    while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
    if (i == 0) return;
    ++digits[i - 1];
  }
}

struct LogicVerdict {
  bool holds = true;
  std::optional<Valuation> counter;
  explicit operator bool() const noexcept { return holds; }
};

/// Every valuation designating all premises designates the conclusion.
inline LogicVerdict consequence(const std::vector<Formula>& premises, const Formula& conclusion,
                                const LogicSpec& logic) {
  std::set<std::string> vars = variables(conclusion);
  for (const auto& p : premises) collect_variables(p, vars);
  LogicVerdict out;
  for_each_valuation(vars, [&](const Valuation& v) {
    for (const auto& p : premises) {
      if (!logic.designated(evaluate(p, v, logic.matrix))) return true;
    }
    if (logic.designated(evaluate(conclusion, v, logic.matrix))) return true;
    out.holds = false;
    out.counter = v;
    return false;
  });
  return out;
}

inline LogicVerdict is_tautology(const Formula& f, const LogicSpec& logic) {
  return consequence({}, f, logic);
}

/// Uniform choice of connective at each inner node, variables from
/// {p, q, r, s} at the leaves; depth 0 is a single variable.
inline Formula random_constant_free_formula(std::mt19937_64& rng, std::size_t depth) {
  static const char* const pool[] = {"p", "q", "r", "s"};
  if (depth == 0 || rng() % 4 == 0) return Formula::variable(pool[rng() % 4]);
  switch (rng() % 3) {
    case 0: return Formula::negation(random_constant_free_formula(rng, depth - 1));
    case 1: {
      Formula a = random_constant_free_formula(rng, depth - 1);
      return Formula::conjunction(std::move(a), random_constant_free_formula(rng, depth - 1));
    }
    default: {
      Formula a = random_constant_free_formula(rng, depth - 1);
      return Formula::disjunction(std::move(a), random_constant_free_formula(rng, depth - 1));
    }
  }
}

struct ProbeReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::optional<Formula> first_violation;
};

/// Samples constant-free formulas and evaluates each under the weak matrix
/// with every variable at h; any value other than h is a violation.
inline ProbeReport no_tautology_probe(std::size_t depth, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ProbeReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    const Formula f = random_constant_free_formula(rng, depth);
    Valuation v;
    for (const auto& name : variables(f)) v[name] = Truth::h;
    ++report.samples;
    if (evaluate(f, v, Matrix::weak) != Truth::h) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = f;
    }
  }
  return report;
}

}  // namespace bisem

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bisem/algebra.hpp"
#include "bisem/balbes.hpp"
#include "bisem/balg.hpp"
#include "bisem/enumerate.hpp"
#include "bisem/errors.hpp"
#include "bisem/filters.hpp"
#include "bisem/kleene.hpp"
#include "bisem/laws.hpp"
#include "bisem/morphism.hpp"
#include "bisem/plonka.hpp"
#include "bisem/report.hpp"
#include "bisem/twospace.hpp"

namespace bisem {

namespace cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int property_fails = 1;
inline constexpr int usage = 2;

struct Loaded {
  std::string path;
  std::string text;
  AlgebraTable alg;
};

inline Loaded load(const std::string& path) {
  std::string text = detail::read_file(path);
  AlgebraTable alg = parse_balg(text);
  return {path, std::move(text), std::move(alg)};
}

inline std::string line_of(const CheckResult& r, const std::vector<std::string>& names) {
  return r ? "holds" : "fails " + describe(r, names);
}

inline std::string indexed_names(char prefix, std::size_t count, Subset s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i + 1));
  return format_subset(s, names);
}

inline int finish(std::ostream& out, const Report& r, int code) {
  out << r.render();
  return code;
}

inline int check(const std::string& path, const std::string& variety, std::ostream& out) {
  const Loaded in = load(path);
  const AlgebraTable& alg = in.alg;
  const auto& names = alg.names();
  Report r{"check", {}, {}, {}};
  r.input(in.path, in.text);
  r.add("elements", std::to_string(alg.size()));
  r.add("signature", alg.signature().to_string());

  std::vector<std::pair<std::string, CheckResult>> laws;
  laws.emplace_back("meet-semilattice", check_semilattice(alg, Operation::meet));
  laws.emplace_back("join-semilattice", check_semilattice(alg, Operation::join));
  laws.emplace_back("distributive", check_distributive(alg));
  laws.emplace_back("absorption", check_absorption(alg));
  const Signature sig = alg.signature();
  laws.emplace_back("bounded", sig.includes(Signature::bounded()) ? check_bounded(alg)
                                                                   : CheckResult::fail("needs zero and one", {}));
  laws.emplace_back("demorgan", sig.includes(Signature::full()) ? check_demorgan(alg)
                                                                 : CheckResult::fail("needs neg, zero and one", {}));
  laws.emplace_back("involutive", sig.includes(Signature::full()) ? check_involutive(alg)
                                                                   : CheckResult::fail("needs neg, zero and one", {}));
  for (const auto& [name, res] : laws) r.add("law " + name, line_of(res, names));

  const VarietySet tags = classify_variety(alg);
  r.add("varieties", to_string(tags));
  const auto requested = parse_variety(variety).value();
  r.add("requested", to_string(requested));

  std::vector<std::string> required{"meet-semilattice", "join-semilattice"};
  if (requested != VarietyTag::IDBS) required.push_back("distributive");
  if (requested == VarietyTag::BDBS || requested == VarietyTag::DDBS) required.push_back("bounded");
  if (requested == VarietyTag::DDBS) required.push_back("demorgan");
  if (requested == VarietyTag::IDBS) required.push_back("involutive");

  const bool holds = tags.count(requested) > 0;
  r.verdict = holds ? "holds" : "fails";
  if (!holds) {
    for (const auto& name : required) {
      const auto it = std::find_if(laws.begin(), laws.end(), [&](const auto& l) { return l.first == name; });
      if (!it->second) {
        r.add("witness", name + ": " + describe(it->second, names));
        break;
      }
    }
  }
  return finish(out, r, holds ? ok : property_fails);
}

inline int filters(const std::string& path, bool prime_only, std::ostream& out) {
  const Loaded in = load(path);
  const AlgebraTable& alg = in.alg;
  Report r{"filters", {}, {}, {}};
  r.input(in.path, in.text);
  if (!is_bisemilattice(alg)) {
    r.verdict = "fails";
    r.add("witness", "not a bisemilattice");
    return finish(out, r, property_fails);
  }
  r.verdict = "ok";
  const auto fs = filters(alg);
  const auto is = ideals(alg);
  const auto pfs = prime_filters(alg);
  const auto pis = prime_ideals(alg);
  r.add("filters", std::to_string(fs.size()));
  r.add("prime-filters", std::to_string(pfs.size()));
  r.add("ideals", std::to_string(is.size()));
  r.add("prime-ideals", std::to_string(pis.size()));
  const auto& names = alg.names();
  for (const auto& f : prime_only ? pfs : fs) r.add(prime_only ? "prime-filter" : "filter", format_subset(f.members, names));
  for (const auto& i : prime_only ? pis : is) r.add(prime_only ? "prime-ideal" : "ideal", format_subset(i.members, names));
  return finish(out, r, ok);
}

inline void describe_representation(Report& r, const AlgebraTable& alg, const RepresentationCertificate& cert) {
  const auto fs = filters(alg);
  const auto is = ideals(alg);
  const auto& names = alg.names();
  r.add("level", to_string(cert.level));
  std::string conds;
  for (const auto& c : cert.conditions) conds += (conds.empty() ? "" : " ") + c;
  r.add("conditions", conds);
  r.add("latt", line_of(cert.latt, names));
  for (std::size_t k = 0; k < fs.size(); ++k) {
    r.add("filter F" + std::to_string(k + 1), format_subset(fs[k].members, names));
  }
  for (std::size_t k = 0; k < is.size(); ++k) {
    r.add("ideal I" + std::to_string(k + 1), format_subset(is[k].members, names));
  }
  const auto down = down_family(alg, is);
  for (std::size_t a = 0; a < alg.size(); ++a) {
    r.add("up " + names[a], indexed_names('F', fs.size(), cert.up_sets[a]));
    r.add("down " + names[a], indexed_names('I', is.size(), down[a].ideals));
  }
  if (alg.has_zero() && cert.matched.zero) r.add("bot", "up " + names[alg.zero()]);
  if (alg.has_one() && cert.matched.one) r.add("top", "up " + names[alg.one()]);
  r.add("isomorphism", "x -> up x onto " + cert.matched.to_string());
}

inline int represent(const std::string& path, std::ostream& out) {
  const Loaded in = load(path);
  Report r{"represent", {}, {}, {}};
  r.input(in.path, in.text);
  if (!in_variety(in.alg, VarietyTag::DBS)) {
    r.verdict = "fails";
    r.add("witness", "not a distributive bisemilattice");
    return finish(out, r, property_fails);
  }
  try {
    const auto cert = verify_representation(in.alg);
    r.verdict = "holds";
    describe_representation(r, in.alg, cert);
    return finish(out, r, ok);
  } catch (const verification_error& e) {
    r.verdict = "fails";
    r.add("witness", e.what());
    return finish(out, r, property_fails);
  }
}

inline TwoSpace space_for(const AlgebraTable& alg, TwoSpaceGrade& grade) {
  const VarietySet tags = classify_variety(alg);
  if (tags.count(VarietyTag::DDBS)) {
    grade = tags.count(VarietyTag::IDBS) ? TwoSpaceGrade::involutive : TwoSpaceGrade::star;
    return build_2space_star(alg);
  }
  grade = TwoSpaceGrade::plain;
  return build_2space(alg.reduct(Signature::lattice()));
}

inline const char* to_string(TwoSpaceGrade g) {
  switch (g) {
    case TwoSpaceGrade::plain: return "2space";
    case TwoSpaceGrade::star: return "2space*";
    case TwoSpaceGrade::involutive: return "2space* involutive";
  }
  return "?";
}

inline CheckResult check_at(const TwoSpace& ts, TwoSpaceGrade grade) {
  return grade == TwoSpaceGrade::plain ? check_2space(ts) : check_2space_star(ts, grade);
}

inline int dualize(const std::string& path, const std::string& format, std::ostream& out) {
  const Loaded in = load(path);
  Report r{"dualize", {}, {}, {}};
  r.input(in.path, in.text);
  if (!in_variety(in.alg, VarietyTag::DBS)) {
    r.verdict = "fails";
    r.add("witness", "not a distributive bisemilattice");
    return finish(out, r, property_fails);
  }
  TwoSpaceGrade grade{};
  const TwoSpace ts = space_for(in.alg, grade);
  const CheckResult res = check_at(ts, grade);
  if (format == "dot") {
    out << space_dot(ts);
    return res ? ok : property_fails;
  }
  r.verdict = res ? "holds" : "fails";
  r.add("grade", to_string(grade));
  r.add("check", line_of(res, {}));
  const auto& names = in.alg.names();
  auto list_space = [&](const FiniteFspace& fs, const char* side, char pt, const char* set) {
    r.add(std::string(side) + "-points", std::to_string(fs.size()));
    for (std::size_t p = 0; p < fs.size(); ++p) {
      r.add(std::string("point ") + pt + std::to_string(p), fs.point_name(p));
    }
    for (std::size_t a = 0; a < fs.index_count(); ++a) {
      std::vector<std::string> pts;
      for (std::size_t p = 0; p < fs.size(); ++p) pts.push_back(std::string(1, pt) + std::to_string(p));
      r.add(std::string(set) + " " + names[a], format_subset(fs.subbasis[a], pts));
    }
  };
  list_space(ts.left, "left", 'x', "X");
  list_space(ts.right, "right", 'y', "Y");
  for (std::size_t a = 0; a < ts.index_count(); ++a) r.add("rho X " + names[a], "Ybar " + names[ts.rho[a]]);
  if (ts.star) {
    for (std::size_t b = 0; b < ts.index_count(); ++b) r.add("star Ybar " + names[b], "X " + names[(*ts.star)[b]]);
    r.add("bottom", "Ybar " + names[*ts.bottom]);
  }
  return finish(out, r, res ? ok : property_fails);
}

inline int roundtrip(const std::string& path, std::ostream& out) {
  const Loaded in = load(path);
  Report r{"roundtrip", {}, {}, {}};
  r.input(in.path, in.text);
  if (!in_variety(in.alg, VarietyTag::DBS)) {
    r.verdict = "fails";
    r.add("witness", "not a distributive bisemilattice");
    return finish(out, r, property_fails);
  }
  try {
    const auto cert = verify_representation(in.alg);
    describe_representation(r, in.alg, cert);
  } catch (const verification_error& e) {
    r.verdict = "fails";
    r.add("witness", e.what());
    return finish(out, r, property_fails);
  }
  TwoSpaceGrade grade{};
  const TwoSpace ts = space_for(in.alg, grade);
  r.add("grade", to_string(grade));
  const CheckResult res = check_at(ts, grade);
  r.add("space-check", line_of(res, {}));
  bool holds = static_cast<bool>(res);
  if (holds) {
    const AlgebraTable back = algebra_of_2space(ts);
    const AlgebraTable expected = in.alg.reduct(back.signature());
    holds = back == expected;
    r.add("space-algebra", holds ? "equal to input under X_a -> a" : "differs from input");
    const TwoSpace again = grade == TwoSpaceGrade::plain ? build_2space(back) : build_2space_star(back);
    const CheckResult iso = check_2space_isomorphic(ts, again);
    r.add("space-roundtrip", line_of(iso, {}));
    holds = holds && iso;
  }
  r.verdict = holds ? "holds" : "fails";
  return finish(out, r, holds ? ok : property_fails);
}

inline int homs(const std::string& pa, const std::string& pb, std::ostream& out) {
  const Loaded a = load(pa);
  const Loaded b = load(pb);
  Report r{"homs", {}, {}, {}};
  r.input(a.path, a.text);
  r.input(b.path, b.text);
  const Signature sig = a.alg.signature().intersect(b.alg.signature());
  const AlgebraTable src = a.alg.reduct(sig);
  const AlgebraTable dst = b.alg.reduct(sig);
  const auto maps = enumerate_homomorphisms(src, dst, sig);
  r.add("signature", sig.to_string());
  r.add("count", std::to_string(maps.size()));
  const bool dual = in_variety(src, VarietyTag::DBS) && in_variety(dst, VarietyTag::DBS);
  bool holds = true;
  std::optional<TwoSpace> sa, sb;
  if (dual) {
    const bool star = sig == Signature::full() && in_variety(src, VarietyTag::DDBS) && in_variety(dst, VarietyTag::DDBS);
    sa = star ? build_2space_star(src) : build_2space(src.reduct(Signature::lattice()));
    sb = star ? build_2space_star(dst) : build_2space(dst.reduct(Signature::lattice()));
  }
  for (const auto& f : maps) {
    std::string line = format_map(src, dst, f);
    if (dual) {
      const TwoSpaceMorphism m = dualize_hom(*sa, *sb, f);
      const CheckResult c = check_morphism(*sb, *sa, m);
      bool back = false;
      if (c) {
        try {
          back = recover_hom(*sb, *sa, m) == f;
        } catch (const verification_error&) {
          back = false;
        }
      }
      line += c && back ? " | duality holds" : " | duality fails";
      holds = holds && c && back;
    }
    r.add("hom", line);
  }
  r.verdict = holds ? "ok" : "fails";
  return finish(out, r, holds ? ok : property_fails);
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline int enumerate(std::size_t size, const std::string& variety, const std::string& mode, std::uint64_t seed,
                     std::size_t count, const std::string& out_dir, std::ostream& out) {
  CorpusSpec spec;
  spec.size = size;
  spec.variety = parse_variety(variety).value();
  spec.mode = mode == "plonka" ? CorpusMode::plonka : CorpusMode::exhaustive;
  spec.seed = seed;
  spec.count = count;
  if (spec.mode == CorpusMode::plonka && spec.size > 16) throw usage_error("Płonka mode supports size <= 16");
  const auto corpus = generate_corpus(spec);

  Report r{"enumerate", {}, "ok", {}};
  r.add("mode", mode);
  r.add("variety", to_string(spec.variety));
  r.add("size", std::to_string(size));
  r.add("seed", std::to_string(seed));
  r.add("count", std::to_string(corpus.size()));
  std::string manifest;
  for (const auto& [k, v] : r.fields) manifest += k + " " + v + "\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "%s-%zu-%03zu.balg", lower(to_string(spec.variety)).c_str(), size, i);
    const std::string text = print_balg(corpus[i]);
    const std::string entry = std::string(name) + " fnv1a64:" + hex64(fnv1a64(text));
    r.add("algebra", entry);
    manifest += "file " + entry + "\n";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      std::ofstream(std::filesystem::path(out_dir) / name, std::ios::binary) << text;
    }
  }
  if (!out_dir.empty()) std::ofstream(std::filesystem::path(out_dir) / "manifest.txt", std::ios::binary) << manifest;
  return finish(out, r, ok);
}

inline int plonka(const std::string& path, const std::string& out_file, std::ostream& out) {
  const std::string text = detail::read_file(path);
  const PlonkaInput in = load_plonka(parse_plonka_spec(text), std::filesystem::path(path).parent_path());
  const AlgebraTable sum = plonka_sum(in.index, in.components, in.links);
  Report r{"plonka", {}, {}, {}};
  r.input(path, text);
  const auto dist = check_distributive(sum);
  r.verdict = dist ? "ok" : "fails";
  r.add("index", std::to_string(in.index.size()));
  r.add("elements", std::to_string(sum.size()));
  r.add("varieties", to_string(classify_variety(sum)));
  r.add("distributive", line_of(dist, sum.names()));
  const std::string doc = print_balg(sum);
  if (!out_file.empty()) {
    std::ofstream(out_file, std::ios::binary) << doc;
    r.add("written", out_file);
    return finish(out, r, dist ? ok : property_fails);
  }
  out << r.render() << "balg\n" << doc;
  return dist ? ok : property_fails;
}

inline int hasse(const std::string& path, const std::string& order, const std::string& format, std::ostream& out) {
  const Loaded in = load(path);
  const OrderKind kind = order == "join" ? OrderKind::join : OrderKind::meet;
  if (format == "dot") {
    out << hasse_dot(in.alg, kind);
    return ok;
  }
  Report r{"hasse", {}, "ok", {}};
  r.input(in.path, in.text);
  r.add("order", order);
  for (const auto& [lo, hi] : induced_order(in.alg, kind).covering_pairs()) {
    r.add("cover", in.alg.name(lo) + " " + in.alg.name(hi));
  }
  return finish(out, r, ok);
}

inline Valuation parse_assignment(const std::string& spec) {
  Valuation v;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw usage_error("assignment '" + item + "' needs name=value");
    const auto value = parse_truth(item.substr(eq + 1));
    if (!value) throw usage_error("unknown truth value in '" + item + "'");
    v[item.substr(0, eq)] = *value;
  }
  return v;
}

inline int logic(const std::string& action, const std::string& logic_name, const std::vector<std::string>& premises,
                 const std::string& formula, const std::string& assign, std::size_t depth, std::size_t samples,
                 std::uint64_t seed, std::ostream& out) {
  Report r{"logic " + action, {}, {}, {}};
  if (action == "probe") {
    const ProbeReport p = no_tautology_probe(depth, samples, seed);
    r.add("depth", std::to_string(depth));
    r.add("samples", std::to_string(p.samples));
    r.add("seed", std::to_string(seed));
    r.add("violations", std::to_string(p.violations));
    if (p.first_violation) r.add("witness", to_string(*p.first_violation));
    r.verdict = p.violations == 0 ? "holds" : "fails";
    return finish(out, r, p.violations == 0 ? ok : property_fails);
  }
  const LogicSpec spec = parse_logic(logic_name).value();
  const Formula f = parse_formula(formula);
  r.add("logic", spec.name);
  r.add("formula", to_string(f));
  if (action == "eval") {
    const Truth v = evaluate(f, parse_assignment(assign), spec.matrix);
    r.verdict = "ok";
    r.add("value", to_string(v));
    r.add("designated", spec.designated(v) ? "yes" : "no");
    return finish(out, r, ok);
  }
  std::vector<Formula> prem;
  for (const auto& p : premises) {
    prem.push_back(parse_formula(p));
    r.add("premise", to_string(prem.back()));
  }
  const LogicVerdict verdict = action == "taut" ? is_tautology(f, spec) : consequence(prem, f, spec);
  r.verdict = verdict ? "holds" : "fails";
  if (verdict.counter) r.add("countervaluation", to_string(*verdict.counter));
  return finish(out, r, verdict ? ok : property_fails);
}

}  // namespace cli

/// Runs one CLI invocation; args excludes the program name. Returns the exit
/// code: 0 success or property holds, 1 property fails, 2 usage or parse error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite distributive bisemilattices: checks, representation, duality, logics", "bisem"};
  app.require_subcommand(1);
  const std::vector<std::string> check_varieties{"dbs", "bdbs", "ddbs", "idbs"};
  const std::vector<std::string> all_varieties{"sem", "dbs", "dlat", "bdbs", "ddbs", "idbs"};

  std::string file, file2, variety = "dbs", format = "text", order, mode = "exhaustive", out_dir, out_file;
  std::string logic_name, formula, assign;
  std::vector<std::string> premises;
  bool prime = false;
  std::size_t size = 0, count = 100, depth = 8, samples = 1000;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Classify an algebra and test one variety");
  check->add_option("file", file, ".balg file")->required();
  check->add_option("--variety", variety, "Variety to test")->check(CLI::IsMember(check_varieties));

  auto* filt = app.add_subcommand("filters", "List filters and ideals");
  filt->add_option("file", file, ".balg file")->required();
  filt->add_flag("--prime", prime, "List prime ones only");

  auto* repr = app.add_subcommand("represent", "Certify the set representation");
  repr->add_option("file", file, ".balg file")->required();

  auto* dual = app.add_subcommand("dualize", "Build and check the dual 2space");
  dual->add_option("file", file, ".balg file")->required();
  dual->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));

  auto* round = app.add_subcommand("roundtrip", "Representation and duality round trip");
  round->add_option("file", file, ".balg file")->required();

  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms and check their duals");
  homs->add_option("source", file, ".balg file")->required();
  homs->add_option("target", file2, ".balg file")->required();

  auto* enumr = app.add_subcommand("enumerate", "Generate a corpus");
  enumr->add_option("--size", size, "Universe size (exhaustive) or size bound (plonka)")->required();
  enumr->add_option("--variety", variety, "Variety")->required()->check(CLI::IsMember(all_varieties));
  enumr->add_option("--mode", mode, "exhaustive or plonka")->check(CLI::IsMember({"exhaustive", "plonka"}));
  enumr->add_option("--seed", seed, "Seed for plonka mode");
  enumr->add_option("--count", count, "Instances in plonka mode");
  enumr->add_option("--out", out_dir, "Directory for .balg files and manifest.txt");

  auto* logic = app.add_subcommand("logic", "Three-valued logics");
  logic->require_subcommand(1);
  const std::vector<std::string> logics{"b3", "pwk", "k3", "p3"};
  auto* taut = logic->add_subcommand("taut", "Tautology check");
  taut->add_option("--logic", logic_name, "b3, pwk, k3 or p3")->required()->check(CLI::IsMember(logics));
  taut->add_option("formula", formula, "Formula")->required();
  auto* eval = logic->add_subcommand("eval", "Evaluate under an assignment");
  eval->add_option("--logic", logic_name, "b3, pwk, k3 or p3")->required()->check(CLI::IsMember(logics));
  eval->add_option("--assign", assign, "Assignment such as p=h,q=0");
  eval->add_option("formula", formula, "Formula")->required();
  auto* cons = logic->add_subcommand("cons", "Consequence check");
  cons->add_option("--logic", logic_name, "b3, pwk, k3 or p3")->required()->check(CLI::IsMember(logics));
  cons->add_option("--premise", premises, "Premise (repeatable)");
  cons->add_option("formula", formula, "Conclusion")->required();
  auto* probe = logic->add_subcommand("probe", "All-h probe over random constant-free formulas");
  probe->add_option("--depth", depth, "Maximum depth");
  probe->add_option("--samples", samples, "Number of formulas");
  probe->add_option("--seed", seed, "Seed");

  auto* plk = app.add_subcommand("plonka", "Build a Płonka sum from a spec file");
  plk->add_option("spec", file, "Spec file")->required();
  plk->add_option("--out", out_file, "Write the sum as .balg");

  auto* has = app.add_subcommand("hasse", "Covering relation of an induced order");
  has->add_option("file", file, ".balg file")->required();
  has->add_option("--order", order, "meet or join")->required()->check(CLI::IsMember({"meet", "join"}));
  has->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? cli::ok : cli::usage;
  }

  try {
    if (*check) return cli::check(file, variety, out);
    if (*filt) return cli::filters(file, prime, out);
    if (*repr) return cli::represent(file, out);
    if (*dual) return cli::dualize(file, format, out);
    if (*round) return cli::roundtrip(file, out);
    if (*homs) return cli::homs(file, file2, out);
    if (*enumr) return cli::enumerate(size, variety, mode, seed, count, out_dir, out);
    if (*plk) return cli::plonka(file, out_file, out);
    if (*has) return cli::hasse(file, order, format, out);
    if (*logic) {
      const std::string action = *taut ? "taut" : *eval ? "eval" : *cons ? "cons" : "probe";
      return cli::logic(action, logic_name, premises, formula, assign, depth, samples, seed, out);
    }
  } catch (const parse_error& e) {
    err << "error: " << (file.empty() ? "" : file + ": ") << e.what() << "\n";
    return cli::usage;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return cli::usage;
  } catch (const malformed_table& e) {
    err << "error: " << e.what() << "\n";
    return cli::usage;
  }
  return cli::usage;
}

}  // namespace bisem

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bisem/bisem.hpp"

using namespace bisem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<AlgebraTable> corpus_up_to(std::size_t max_n) {
  std::vector<AlgebraTable> out;
  for (auto v : {VarietyTag::SEM, VarietyTag::DBS, VarietyTag::DLAT, VarietyTag::BDBS, VarietyTag::DDBS,
                 VarietyTag::IDBS}) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto& a : enumerate_exhaustive(n, v)) out.push_back(std::move(a));
    }
  }
  return out;
}

TwoSpace space_for(const AlgebraTable& alg) {
  return alg.signature().includes(Signature::full()) ? build_2space_star(alg) : build_2space(alg);
}

AlgebraTable comparable_reduct(const AlgebraTable& alg) {
  return alg.signature().includes(Signature::full()) ? alg : alg.reduct(Signature::lattice());
}

Subset up_of(const SetAlgebra& sa, std::size_t a) { return sa.x[a]; }

Outcome weak_kleene_pipeline() {
  Outcome o;
  std::ostringstream d;
  const auto w = builtin("weak_kleene_3");
  const auto tags = classify_variety(w);
  const VarietySet want{VarietyTag::DBS, VarietyTag::BDBS, VarietyTag::DDBS, VarietyTag::IDBS};
  o.pass = o.pass && tags == want;
  d << "tags " << to_string(tags);

  const auto nf = filters(w).size(), npf = prime_filters(w).size();
  const auto ni = ideals(w).size(), npi = prime_ideals(w).size();
  o.pass = o.pass && nf == 3 && npf == 2 && ni == 3 && npi == 2;
  d << "; filters " << nf << "/" << npf << " ideals " << ni << "/" << npi;

  const auto sa = build_set_algebra(w);
  const auto derived = derived_algebra(sa);
  const bool bounds = derived.zero() == 0 && derived.one() == 2 && up_of(sa, derived.zero()) == up_of(sa, 0) &&
                      up_of(sa, derived.one()) == up_of(sa, 2);
  o.pass = o.pass && bounds;
  d << "; bottom=up(0) top=up(1) " << (bounds ? "yes" : "no");

  const detail::SetOps ops{sa};
  const auto lhs = ops.plus(0, ops.cap(1, 0));
  const bool sum = sa.x[lhs] == sa.x[1] && sa.x[lhs] != sa.x[0];
  o.pass = o.pass && sum;
  d << "; up(0)+(up(h).up(0)) = up(" << w.name(lhs) << ")";
  o.detail = d.str();
  return o;
}

Outcome representation_round_trip(const std::vector<AlgebraTable>& corpus, const std::vector<AlgebraTable>& plonka) {
  std::size_t ok = 0, failed = 0;
  std::string first;
  for (const auto* set : {&corpus, &plonka}) {
    for (const auto& alg : *set) {
      try {
        verify_representation(alg);
        ++ok;
      } catch (const std::exception& e) {
        if (first.empty()) first = e.what();
        ++failed;
      }
    }
  }
  Outcome o;
  o.pass = failed == 0 && plonka.size() >= 100;
  o.detail = std::to_string(ok) + " verified (" + std::to_string(corpus.size()) + " exhaustive, " +
             std::to_string(plonka.size()) + " Płonka), " + std::to_string(failed) + " failed";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome object_duality(const std::vector<AlgebraTable>& corpus) {
  std::size_t failed = 0;
  for (const auto& alg : corpus) {
    const auto ts = space_for(alg);
    bool good = check_2space(ts).holds;
    if (good && ts.has_star()) {
      const auto grade = in_variety(alg, VarietyTag::IDBS) ? TwoSpaceGrade::involutive : TwoSpaceGrade::star;
      good = check_2space_star(ts, grade).holds;
    }
    good = good && find_isomorphism(algebra_of_2space(ts), comparable_reduct(alg)).has_value();
    if (!good) ++failed;
  }
  Outcome o;
  o.pass = failed == 0;
  o.detail = std::to_string(corpus.size()) + " algebras, " + std::to_string(failed) + " failed";
  return o;
}

Outcome morphism_duality(const std::vector<AlgebraTable>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = corpus.size();
  std::vector<TwoSpace> spaces;
  for (const auto& a : corpus) spaces.push_back(space_for(a));

  struct Arrow {
    Homomorphism f;
    TwoSpaceMorphism dual;
  };
  std::vector<std::vector<std::vector<Arrow>>> arrows(n, std::vector<std::vector<Arrow>>(n));
  std::size_t homs = 0, check_fail = 0, recover_fail = 0, starred = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto sig = corpus[i].signature().intersect(corpus[j].signature());
      for (auto& f : enumerate_homomorphisms(corpus[i].reduct(sig), corpus[j].reduct(sig), sig)) {
        ++homs;
        auto m = dualize_hom(spaces[i], spaces[j], f);
        if (!check_morphism(spaces[j], spaces[i], m)) ++check_fail;
        if (spaces[i].has_star() && spaces[j].has_star()) ++starred;
        try {
          if (recover_hom(spaces[j], spaces[i], m) != f) ++recover_fail;
        } catch (const verification_error&) {
          ++recover_fail;
        }
        arrows[i][j].push_back({std::move(f), std::move(m)});
      }
    }
  }
  std::size_t pairs = 0, functor_fail = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (arrows[a][b].empty()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        for (const auto& f : arrows[a][b]) {
          for (const auto& g : arrows[b][c]) {
            ++pairs;
            const auto whole = dualize_hom(spaces[a], spaces[c], compose(g.f, f.f));
            if (whole != compose(f.dual, g.dual)) ++functor_fail;
          }
        }
      }
    }
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = check_fail == 0 && recover_fail == 0 && functor_fail == 0;
  std::ostringstream d;
  d << homs << " homs (" << starred << " at star grade), " << check_fail << " check failures, " << recover_fail
    << " recovery failures; " << pairs << " composable pairs, " << functor_fail << " functoriality failures; ";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  d << buf;
  o.detail = d.str();
  return o;
}

Outcome separation(const std::vector<AlgebraTable>& corpus, const std::vector<AlgebraTable>& plonka) {
  std::size_t cases = 0, failed = 0;
  for (const auto* set : {&corpus, &plonka}) {
    for (const auto& alg : *set) {
      for (std::size_t a = 0; a < alg.size(); ++a) {
        for (std::size_t b = 0; b < alg.size(); ++b) {
          if (alg.meet(a, b) == a) continue;
          ++cases;
          try {
            const auto f = separation_witness(alg, a, b);
            if (!f.contains(a) || f.contains(b) || !is_prime(alg, f)) ++failed;
          } catch (const std::exception&) {
            ++failed;
          }
        }
      }
    }
  }
  Outcome o;
  o.pass = failed == 0 && cases > 0;
  o.detail = std::to_string(cases) + " pairs, " + std::to_string(failed) + " failures";
  return o;
}

Outcome latt_vs_absorption(const std::vector<AlgebraTable>& corpus, const std::vector<AlgebraTable>& plonka) {
  std::size_t total = 0, forward_fail = 0, backward_fail = 0, latt = 0;
  for (const auto* set : {&corpus, &plonka}) {
    for (const auto& alg : *set) {
      ++total;
      const bool l = check_condition_latt(build_set_algebra(alg)).holds;
      const bool a = check_absorption(alg).holds;
      latt += l ? 1 : 0;
      if (l && !a) ++forward_fail;
      if (a && !l) ++backward_fail;
    }
  }
  Outcome o;
  o.pass = forward_fail == 0;
  o.detail = std::to_string(total) + " algebras, latt holds on " + std::to_string(latt) + "; latt => absorption: " +
             std::to_string(forward_fail) + " counterexamples; absorption => latt (empirical): " +
             std::to_string(backward_fail) + " counterexamples";
  return o;
}

Outcome kleene() {
  Outcome o;
  std::ostringstream d;
  const auto strong = check_absorption(builtin("strong_kleene_3"));
  const auto w = builtin("weak_kleene_3");
  const auto weak = check_absorption(w);
  const bool absorption = strong.holds && !weak.holds && weak.witness == std::vector<std::size_t>{0, 1};
  d << "K3 absorption " << (strong.holds ? "holds" : "fails") << ", weak " << describe(weak, w.names());

  const auto lem = parse_formula("p | ~p");
  const bool pwk = is_tautology(lem, logic_pwk()).holds;
  const bool k3 = is_tautology(lem, logic_k3()).holds;
  const bool b3 = is_tautology(lem, logic_b3()).holds;
  d << "; p|~p PWK " << pwk << " K3 " << k3 << " B3 " << b3;

  const auto probe = no_tautology_probe(8, 1000, 1);
  d << "; probe " << probe.samples << " formulas, " << probe.violations << " violations";
  o.pass = absorption && pwk && !k3 && !b3 && probe.samples == 1000 && probe.violations == 0;
  o.detail = d.str();
  return o;
}

Outcome plonka_example() {
  const auto index = AlgebraTable::from_rows({"i0", "i1"}, {{0, 1}, {1, 1}}, {{0, 1}, {1, 1}});
  const auto b2 = builtin("bool_2").reduct(Signature::lattice());
  const auto sum = plonka_sum(index, {b2, builtin("lattice_1")}, {{0, 1, Homomorphism{{0, 0}}}});
  const auto target = builtin("weak_kleene_3").reduct(Signature::lattice());
  const auto iso = find_isomorphism(sum, target);
  Outcome o;
  o.pass = iso.has_value();
  o.detail = iso ? "isomorphism " + format_map(sum, target, *iso) : "no isomorphism";
  return o;
}

}  // namespace

int main() {
  const auto corpus = corpus_up_to(4);
  const auto plonka = generate_plonka(8, 100, 2024);
  std::vector<AlgebraTable> dbs_corpus;
  for (const auto& a : corpus) {
    if (in_variety(a, VarietyTag::DBS)) dbs_corpus.push_back(a);
  }
  const std::vector<std::function<Outcome()>> criteria{
      weak_kleene_pipeline,
      [&] { return representation_round_trip(corpus, plonka); },
      [&] { return object_duality(corpus); },
      [&] { return morphism_duality(corpus); },
      [&] { return separation(dbs_corpus, plonka); },
      [&] { return latt_vs_absorption(dbs_corpus, plonka); },
      kleene,
      plonka_example,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

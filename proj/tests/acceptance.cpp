// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. `--update-golden` rewrites the CLI golden files instead of
// comparing against them.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mdi/mdi.hpp"
#include "support/independent.hpp"
#include "support/run.hpp"

using namespace mdi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

ExpVector M(const char* text, std::size_t n) { return parse_monomial(text, n); }

// 1. Support-level closure of <y1^2, y2^2>.
Outcome example_41() {
  IdealPresentation I(2, ClosureKind::well_mixed, {M("y1^2", 2), M("y2^2", 2)});
  const std::vector<std::pair<const char*, bool>> expected = {
      {"y1^{x+1}", true}, {"y2^{x+1}", true}, {"1", false},      {"y1", false},
      {"y1^{x}", false},  {"y2", false},      {"y2^{x}", false}, {"y1*y2", false}};
  Outcome o;
  for (const auto& [text, want] : expected) {
    auto v = M(text, 2);
    bool fast = member(v, I);
    bool truth = oracle::wm_closure_decide(v, I.gens());
    if (fast != want || truth != want) {
      o.pass = false;
      o.detail += std::string(" ") + text;
    }
  }
  o.detail = o.pass ? "8/8 verdicts match (fast and oracle)" : "mismatch:" + o.detail;
  return o;
}

// 2. Fast member() against the oracles on exhaustive grids.
Outcome oracle_equivalence() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(1000 + n);
    auto grid = oracle::enumerate_grid(n, 3, 3);
    oracle::VerifyReport rep;
    for (int s = 0; s < 50; ++s)
      rep.merge(oracle::verify_generator_set(oracle::random_generator_set(rng, n, 3, 3, 3), n, grid));
    o.pass = o.pass && rep.disagreements() == 0;
    d << "n=" << n << ": " << rep.checked() << " checks, " << rep.disagreements() << " disagreements, "
      << rep.false_at_caps() << " false-at-caps; ";
  }
  o.detail = d.str();
  return o;
}

// 3. Decomposition correctness, uniqueness, and the three-component example.
Outcome decomposition() {
  Outcome o;
  std::mt19937_64 rng(3003);
  std::size_t grid_points = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto S = oracle::random_generator_set(rng, n, 4, 3, 3);
    IdealPresentation I(n, ClosureKind::radical_well_mixed, S);
    auto D = standard_prime_decomposition(I);
    auto report = oracle::decomposition_grid_check(I, D, {3, 3});
    grid_points += report.checked;
    std::vector<indep::Vec> degs;
    for (const auto& g : S) degs.push_back(deg_vector(g).entries);
    bool ok = report.disagreements.empty() && indep::to_set(D.components) == indep::choice_function_decomposition(degs, n);
    auto P = S;
    std::shuffle(P.begin(), P.end(), rng);
    ok = ok && standard_prime_decomposition(IdealPresentation(n, ClosureKind::radical_well_mixed, P)) == D;
    P.push_back(S.front() + oracle::random_generator_set(rng, n, 1, 2, 2).front());
    ok = ok && standard_prime_decomposition(IdealPresentation(n, ClosureKind::radical_well_mixed, P)) == D;
    if (!ok) {
      o.pass = false;
      o.detail = "failed on " + render(I);
      return o;
    }
  }
  auto E = standard_prime_decomposition(
      IdealPresentation(2, ClosureKind::radical_well_mixed, {M("y1^{x}*y2", 2), M("y1*y2^{x}", 2)}));
  std::vector<CharVector> want = {{-1, 0}, {0, -1}, {1, 1}};
  if (E.components != want) {
    o.pass = false;
    o.detail = "worked example gave a different decomposition";
    return o;
  }
  o.detail = "120 random ideals, " + std::to_string(grid_points) +
             " grid points, permutation/absorption invariant; example = {(-1,0),(0,-1),(1,1)}";
  return o;
}

// 4. Intersection by products, rwm and perfect.
Outcome intersection_law() {
  Outcome o;
  std::mt19937_64 rng(4004);
  int pairs = 0;
  for (auto kind : {ClosureKind::radical_well_mixed, ClosureKind::perfect})
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t n = 1 + trial % 3;
      IdealPresentation I(n, kind, oracle::random_generator_set(rng, n, 3, 3, 3));
      IdealPresentation J(n, kind, oracle::random_generator_set(rng, n, 3, 3, 3));
      auto K = intersect(I, J);
      for (const auto& v : oracle::enumerate_grid(n, 3, 3))
        if (member(v, K) != (member(v, I) && member(v, J))) {
          o.pass = false;
          o.detail = "failed for " + std::string(to_string(kind)) + " at " + render(v);
          return o;
        }
      ++pairs;
    }
  o.detail = std::to_string(pairs / 2) + " pairs per kind (rwm, perfect), exhaustive grids";
  return o;
}

// 5. Perfect decomposition equals brute-force minimal transversals.
Outcome transversals() {
  Outcome o;
  std::size_t hypergraphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> edges;
    // Sets of distinct nonempty edges, up to five of them.
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t from) {
      if (!edges.empty()) {
        ++hypergraphs;
        std::vector<ExpVector> gens;
        for (auto e : edges) {
          std::vector<long> b(n);
          for (std::size_t i = 0; i < n; ++i) b[i] = ((e >> i) & 1u) ? 0 : -1;
          gens.push_back(support_monomial(pattern_monomial(CharVector(b))));
        }
        auto D = perfect_prime_decomposition(IdealPresentation(n, ClosureKind::perfect, gens));
        if (indep::to_set(D.components) != indep::brute_minimal_transversals(edges, n)) return false;
      }
      if (edges.size() == 5) return true;
      for (std::uint32_t e = from; e < full; ++e) {
        edges.push_back(e);
        bool ok = rec(e + 1);
        edges.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!rec(1)) {
      o.pass = false;
      o.detail = "mismatch at n=" + std::to_string(n);
      return o;
    }
  }
  o.detail = std::to_string(hypergraphs) + " hypergraphs (n<=6, <=5 edges) match";
  return o;
}

// 6. Alexander duality.
Outcome duality() {
  Outcome o;
  std::size_t complements = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& a : indep::box(n, 3))
      for (const auto& b : indep::box(n, 3)) {
        bool admissible = true;
        for (std::size_t i = 0; i < n; ++i) admissible = admissible && b[i] <= a[i] + 1;
        if (!admissible) continue;
        ++complements;
        if (a_complement(CharVector(a), a_complement(CharVector(a), CharVector(b))) != CharVector(b)) {
          o.pass = false;
          o.detail = "a\\(a\\b) != b";
          return o;
        }
      }

  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<long> entry(-1, 3), bump(0, 1);
  std::uniform_int_distribution<int> count(1, 4);
  std::size_t checks = 0;
  int ideals = 0;
  while (ideals < 60) {
    std::size_t n = 1 + ideals % 3;
    std::vector<ExpVector> gens;
    for (int k = count(rng); k > 0; --k) {
      std::vector<long> e(n);
      for (auto& x : e) x = entry(rng);
      gens.push_back(pattern_monomial(CharVector(e)));
    }
    IdealPresentation I(n, ClosureKind::radical_well_mixed, gens);
    if (I.is_unit()) continue;
    ++ideals;
    auto a = default_point(I);
    for (auto& e : a.entries) e = std::min(3L, e + bump(rng));
    DualityContext ctx(a, I);
    if (!involution_check(ctx) || !dual_routes_agree(ctx)) {
      o.pass = false;
      o.detail = "involution or route agreement failed for " + render(I);
      return o;
    }
    for (const auto& b : indep::box(n, 3)) {
      if (!indep::leq(b, a.entries)) continue;
      ++checks;
      if (!complementation_check(ctx, CharVector(b))) {
        o.pass = false;
        o.detail = "complementation failed for " + render(I) + " at " + to_string(CharVector(b));
        return o;
      }
    }
  }

  // The point (0,0) fails to dominate the dual of <y1 y2>_r, while the
  // involution still holds.
  DualityContext edge(CharVector{0, 0}, IdealPresentation(2, ClosureKind::radical_well_mixed, {M("y1*y2", 2)}));
  bool edge_ok = !point_dominates_dual(edge) && involution_check(edge);
  if (!edge_ok) {
    o.pass = false;
    o.detail = "domination edge case behaved differently than recorded";
    return o;
  }
  o.detail = std::to_string(complements) + " a\\(a\\b) identities; " + std::to_string(ideals) +
             " ideals, involution + routes ok, " + std::to_string(checks) +
             " complementation checks; edge case <y1y2>_r at (0,0): dual not dominated, involution holds";
  return o;
}

// 7. Adding a dominated generator never changes the reduced presentation.
Outcome ascending_chain() {
  Outcome o;
  std::mt19937_64 rng(7007);
  int trials = 0;
  for (; trials < 1200; ++trials) {
    std::size_t n = 1 + trials % 3;
    auto S = oracle::random_generator_set(rng, n, 4, 3, 3);
    IdealPresentation I(n, ClosureKind::well_mixed, S);
    auto R = reduce_generators(I);
    // A dominated element: a generator pushed up by closure moves.
    auto u = S[static_cast<std::size_t>(trials) % S.size()];
    auto t = oracle::random_generator_set(rng, n, 1, 2, 2).front();
    ExpVector w = trials % 3 == 0 ? shift(u, 1) : trials % 3 == 1 ? u + t : shift(u + t, 2);
    if (!precedes_vec(u, w)) {
      o.pass = false;
      o.detail = "constructed element not dominated";
      return o;
    }
    auto T = S;
    T.push_back(w);
    if (reduce_generators(IdealPresentation(n, ClosureKind::well_mixed, T)) != R) {
      o.pass = false;
      o.detail = "reduction changed after adding " + render(w) + " to " + render(I);
      return o;
    }
  }
  o.detail = std::to_string(trials) + " trials, reduction unchanged";
  return o;
}

std::vector<std::string> split_args(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string a; in >> a;) out.push_back(a);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// 8. Golden files for every verb, byte-identical across reruns.
Outcome cli_determinism(bool update) {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path golden = fs::path(MDI_SOURCE_DIR) / "tests" / "golden";
  std::ifstream cases(golden / "cases.txt");
  if (!cases) return {false, "missing cases.txt"};
  std::set<std::string> verbs;
  int n = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    std::string name = trim(line.substr(0, bar)), args = trim(line.substr(bar + 1));
    std::string cmd = "cd '" + std::string(MDI_SOURCE_DIR) + "' && '" + std::string(MDI_CLI) + "'";
    for (const auto& a : split_args(args)) cmd += " '" + a + "'";
    verbs.insert(split_args(args).front());
    auto first = testing_support::run(cmd + " 2>/dev/null");
    auto second = testing_support::run(cmd + " 2>/dev/null");
    ++n;
    const fs::path file = golden / (name + ".json");
    if (update) {
      std::ofstream(file, std::ios::binary) << first.out;
      continue;
    }
    std::ifstream in(file, std::ios::binary);
    std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (first.exit_code != 0 || first.out != second.out || first.out != expected) {
      o.pass = false;
      o.detail += " " + name;
    }
  }
  if (!o.pass) {
    o.detail = "golden mismatch or nondeterminism:" + o.detail;
    return o;
  }
  if (verbs.size() < 7) return {false, "golden cases cover only " + std::to_string(verbs.size()) + " verbs"};
  o.detail = std::to_string(n) + " golden cases over " + std::to_string(verbs.size()) +
             " verbs, byte-identical reruns" + (update ? " (golden files rewritten)" : "");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool update = argc > 1 && std::string(argv[1]) == "--update-golden";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 example 4.1 support-level verdicts", example_41},
      {"C2 oracle equivalence on exhaustive grids", oracle_equivalence},
      {"C3 decomposition correctness and uniqueness", decomposition},
      {"C4 intersection law (rwm and perfect)", intersection_law},
      {"C5 perfect decomposition = minimal transversals", transversals},
      {"C6 Alexander duality", duality},
      {"C7 ascending-chain reduction stability", ascending_chain},
      {"C8 CLI golden files and determinism", [update] { return cli_determinism(update); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << " [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

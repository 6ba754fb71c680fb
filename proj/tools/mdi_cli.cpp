// mdi: command-line front end. JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 ok, 1 usage / parse / arity error, 2 overflow or search cap
// exceeded, 3 precondition violation (wrong kind, unit ideal, bad point).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdi/mdi.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mdi;

constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitPrecondition = 3;

json char_vector_json(const CharVector& b) { return json(b.entries); }

json monomials_json(const std::vector<ExpVector>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(render(g));
  return out;
}

json generators_json(const IdealPresentation& I) {
  if (I.is_unit()) return json::array({"1"});
  return monomials_json(I.gens());
}

json decomposition_json(const Decomposition& D) {
  json comps = json::array();
  for (const auto& b : D.components) comps.push_back(char_vector_json(b));
  return {{"flavor", to_string(D.flavor)}, {"components", comps}};
}

json header(const std::string& verb) { return {{"schema", 1}, {"verb", verb}}; }

IdealPresentation load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return parse_ideal(in);
}

ClosureKind kind_option(const std::string& s) {
  auto k = parse_kind(s);
  if (!k) throw ParseError("unknown kind '" + s + "'", 0);
  return *k;
}

// Does the `to` closure of a `from`-closed ideal keep the same generators?
bool refines(ClosureKind from, ClosureKind to) {
  using K = ClosureKind;
  if (from == to || from == K::delta || to == K::perfect) return true;
  return from == K::well_mixed && to == K::radical_well_mixed;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct MemberArgs {
  std::string file, kind;
  std::vector<std::string> monomials;
};

void run_member(const MemberArgs& a) {
  auto I = load_ideal(a.file);
  if (!a.kind.empty()) I = I.with_kind(kind_option(a.kind));
  json results = json::array();
  bool all = true;
  for (const auto& text : a.monomials) {
    auto v = parse_monomial(text, I.arity());
    bool in = member(v, I);
    all = all && in;
    results.push_back({{"monomial", render(v)}, {"member", in}});
  }
  json j = header("member");
  j["kind"] = to_string(I.kind());
  j["arity"] = I.arity();
  j["results"] = results;
  j["all"] = all;
  emit(j);
}

struct ClosureArgs {
  std::string file, kind;
};

void run_closure(const ClosureArgs& a) {
  auto I = load_ideal(a.file);
  auto to = kind_option(a.kind);
  if (!refines(I.kind(), to))
    throw PreconditionError("the " + std::string(to_string(to)) + " closure of a " + std::string(to_string(I.kind())) +
                            " ideal is not generated by the same set");
  auto C = reduce_generators(I.with_kind(to));
  json j = header("closure");
  j["from"] = to_string(I.kind());
  j["kind"] = to_string(C.kind());
  j["arity"] = C.arity();
  j["generators"] = generators_json(C);
  emit(j);
}

void run_reduce(const std::string& file) {
  auto I = load_ideal(file);
  auto R = reduce_generators(I);
  json j = header("reduce");
  j["kind"] = to_string(R.kind());
  j["arity"] = R.arity();
  j["input_generators"] = I.gens().size() + (I.is_unit() ? 1 : 0);
  j["generators"] = generators_json(R);
  emit(j);
}

void run_decompose(const std::string& file) {
  auto I = load_ideal(file);
  json j = header("decompose");
  j["kind"] = to_string(I.kind());
  j["arity"] = I.arity();
  j.update(decomposition_json(decompose(I)));
  emit(j);
}

struct DualArgs {
  std::string file, point;
};

void run_dual(const DualArgs& a) {
  auto I = load_ideal(a.file);
  if (I.kind() != ClosureKind::radical_well_mixed)
    throw PreconditionError("dual needs a radical_well_mixed ideal, got " + std::string(to_string(I.kind())));
  DualityContext ctx = a.point.empty() ? DualityContext(I) : DualityContext(parse_char_vector(a.point), I);
  auto dual = alexander_dual(ctx);
  json j = header("dual");
  j["arity"] = I.arity();
  j["point"] = char_vector_json(ctx.point());
  j.update(decomposition_json(dual.components));
  j["generators"] = generators_json(dual.generators);
  j["routes_agree"] = dual_routes_agree(ctx);
  j["involution"] = involution_check(ctx);
  j["point_dominates_dual"] = point_dominates_dual(ctx);
  emit(j);
}

struct CheckArgs {
  std::string file, property;
  long max_degree = -1;
  Coeff max_coeff = 0;
  std::size_t max_candidates = std::size_t{1} << 20;
};

void run_check(const CheckArgs& a) {
  auto I = load_ideal(a.file);
  json j = header("check");
  j["property"] = a.property;
  if (a.property == "prime") {
    auto b = is_prime(I);
    j["result"] = b.has_value();
    j["component"] = b ? char_vector_json(*b) : json(nullptr);
    emit(j);
    return;
  }
  auto prop = parse_property(a.property);
  if (!prop) throw ParseError("unknown property '" + a.property + "'", 0);
  auto verdict = is_closed_under(I, *prop, {a.max_degree, a.max_coeff, a.max_candidates});
  j["result"] = to_string(verdict.status);
  j["witness"] = verdict.witness ? json(render(*verdict.witness)) : json(nullptr);
  j["candidates_checked"] = verdict.candidates_checked;
  emit(j);
}

struct VerifyArgs {
  std::string file;
  std::size_t arity = 2;
  std::size_t sets = 50;
  std::size_t max_gens = 3;
  std::uint64_t seed = 1;
  long max_degree = 3;
  Coeff max_sum = 3;
  unsigned jobs = 1;
};

json tally_json(const oracle::KindTally& t) {
  json j = {{"checked", t.checked}, {"disagreements", t.disagreements}, {"false_at_caps", t.false_at_caps}};
  if (t.first_disagreement)
    j["first_disagreement"] = {{"monomial", render(t.first_disagreement->first)},
                               {"fast", t.first_disagreement->second}};
  return j;
}

void run_verify(const VerifyArgs& a) {
  std::vector<std::vector<ExpVector>> sets;
  std::size_t arity = a.arity;
  if (!a.file.empty()) {
    auto I = load_ideal(a.file);
    if (I.is_unit()) throw PreconditionError("verify needs a non-unit generator set");
    arity = I.arity();
    sets.push_back(I.gens());
  } else {
    if (arity == 0) throw ParseError("arity must be at least 1", 0);
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.sets; ++i)
      sets.push_back(oracle::random_generator_set(rng, arity, a.max_gens, a.max_degree, a.max_sum));
  }
  auto grid = oracle::enumerate_grid(arity, a.max_degree, a.max_sum);
  const oracle::OracleCaps caps{a.max_degree, a.max_sum, 1'000'000};

  // Results are merged in set order, so the report does not depend on --jobs.
  std::vector<oracle::VerifyReport> reports(sets.size());
  std::vector<std::exception_ptr> errors(sets.size());
  unsigned jobs = std::max(1u, a.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < sets.size(); i += jobs) {
        try {
          reports[i] = oracle::verify_generator_set(sets[i], arity, grid, caps);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  oracle::VerifyReport total;
  for (const auto& r : reports) total.merge(r);
  json kinds = json::object();
  for (const auto& [k, t] : total.kinds) kinds[std::string(to_string(k))] = tally_json(t);
  json j = header("verify");
  j["arity"] = arity;
  j["sets"] = sets.size();
  j["grid_size"] = grid.size();
  j["checked"] = total.checked();
  j["disagreements"] = total.disagreements();
  j["false_at_caps"] = total.false_at_caps();
  j["kinds"] = kinds;
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial difference ideals: membership, closures, decompositions, duals"};
  app.require_subcommand(1);

  MemberArgs member_args;
  auto* member_cmd = app.add_subcommand("member", "Membership of monomials (a polynomial's support) in an ideal");
  member_cmd->add_option("ideal", member_args.file, "Ideal file")->required();
  member_cmd->add_option("monomials", member_args.monomials, "Monomials, e.g. y1^{x+1}*y2")->required();
  member_cmd->add_option("--kind", member_args.kind, "Override the file's closure kind");

  ClosureArgs closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "Generators of a larger closure of the ideal");
  closure_cmd->add_option("ideal", closure_args.file, "Ideal file")->required();
  closure_cmd->add_option("--kind", closure_args.kind, "Target closure kind")->required();

  std::string reduce_file;
  auto* reduce_cmd = app.add_subcommand("reduce", "Minimal generators for the file's closure kind");
  reduce_cmd->add_option("ideal", reduce_file, "Ideal file")->required();

  std::string decompose_file;
  auto* decompose_cmd = app.add_subcommand("decompose", "Prime decomposition (radical_well_mixed or perfect)");
  decompose_cmd->add_option("ideal", decompose_file, "Ideal file")->required();

  DualArgs dual_args;
  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual of a radical_well_mixed ideal");
  dual_cmd->add_option("ideal", dual_args.file, "Ideal file")->required();
  dual_cmd->add_option("--point", dual_args.point, "Duality point, comma-separated (default: max character vector)");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Primality or closedness of a delta ideal");
  check_cmd->add_option("ideal", check_args.file, "Ideal file (kind delta)")->required();
  check_cmd->add_option("--property", check_args.property, "prime | radical | reflexive | perfect | rwm")
      ->required();
  check_cmd->add_option("--max-degree", check_args.max_degree, "Witness degree cap (default 2*maxdeg+2)");
  check_cmd->add_option("--max-coeff", check_args.max_coeff, "Witness coefficient cap (default maxcoef+1)");
  check_cmd->add_option("--max-candidates", check_args.max_candidates, "Candidate budget");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Fast membership against the brute-force oracles on a grid");
  verify_cmd->add_option("ideal", verify_args.file, "Ideal file (default: random generator sets)");
  verify_cmd->add_option("--arity", verify_args.arity, "Arity of random sets")->capture_default_str();
  verify_cmd->add_option("--sets", verify_args.sets, "Number of random sets")->capture_default_str();
  verify_cmd->add_option("--max-gens", verify_args.max_gens, "Generators per random set")->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--max-degree", verify_args.max_degree, "Grid degree bound")->capture_default_str();
  verify_cmd->add_option("--max-sum", verify_args.max_sum, "Grid coefficient-sum bound")->capture_default_str();
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*member_cmd) run_member(member_args);
    else if (*closure_cmd) run_closure(closure_args);
    else if (*reduce_cmd) run_reduce(reduce_file);
    else if (*decompose_cmd) run_decompose(decompose_file);
    else if (*dual_cmd) run_dual(dual_args);
    else if (*check_cmd) run_check(check_args);
    else if (*verify_cmd) run_verify(verify_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}

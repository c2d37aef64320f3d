// coxhurwitz: command-line front end for Hurwitz orbits, straightening,
// transitivity braids, reduced reflection factorizations and Bruhat graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <coxhurwitz/bruhat.hpp>
#include <coxhurwitz/hurwitz.hpp>
#include <coxhurwitz/io.hpp>
#include <coxhurwitz/json.hpp>
#include <coxhurwitz/parabolic.hpp>

using namespace coxhurwitz;

namespace {

CoxeterSystem load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open group file '" + path + "'");
  return CoxeterSystem::from_matrix(parse_group_matrix(in));
}

// --budget, else COXHURWITZ_BUDGET, else the library default.
std::size_t set_budget(std::size_t flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("COXHURWITZ_BUDGET")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18 || std::stoull(s) == 0)
      throw ContractError("COXHURWITZ_BUDGET must be a positive integer, got '" + s + "'");
    return std::stoull(s);
  }
  return default_set_budget;
}

ReflectionSubgroup load_subgroup(const CoxeterSystem& sys, const std::string& gens, std::size_t budget) {
  auto f = parse_factorization(sys, gens);
  if (f.size() == 0) throw ContractError("--subgroup needs at least one reflection");
  auto sub = subgroup_closure(f.entries(), budget);
  if (!sub.complete) throw BudgetError("subgroup closure exceeded budget of " + std::to_string(budget));
  return sub;
}

void print_factorizations(const std::vector<Factorization>& fs) {
  for (const auto& f : fs) std::cout << format_factorization(f) << "\n";
  std::cout << "size " << fs.size() << "\n";
}

nlohmann::json factorizations_json(const std::vector<Factorization>& fs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : fs) arr.push_back(factorization_json(f));
  return arr;
}

std::string labelled(const std::string& label, const std::string& value) {
  return value.empty() ? label + ":" : label + ": " + value;
}

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << name << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
}

bool check_thm1(const CoxeterSystem& sys, std::size_t budget) {
  Word c;
  for (int s = 1; s <= static_cast<int>(sys.rank()); ++s) c.push_back(s);
  const auto target = Factorization::of_generators(sys, c);
  const auto orbit = hurwitz_orbit(target, budget);
  const auto red = red_enumerate(target.product());
  bool braids = true;
  for (const auto& f : red) {
    try {
      braids = braids && apply_braid(f, transitivity_braid(f, c)) == target;
    } catch (const InternalError&) {
      braids = false;
    }
  }
  const bool ok = orbit == red && braids;
  report("thm1", ok, "orbit " + std::to_string(orbit.size()) + ", Red_T(c) " + std::to_string(red.size()));
  return ok;
}

bool check_thm2(const CoxeterSystem& sys, std::size_t budget) {
  std::size_t subgroups = 0, elements = 0;
  bool ok = true;
  for (unsigned mask = 1; mask < (1u << sys.rank()); ++mask) {
    std::vector<Element> gens;
    for (unsigned s = 0; s < sys.rank(); ++s)
      if (mask & (1u << s)) gens.push_back(sys.generator(static_cast<int>(s + 1)));
    auto sub = subgroup_closure(gens, budget);
    if (!sub.complete) throw BudgetError("parabolic subgroup exceeded budget");
    ++subgroups;
    for (const auto& w : sub.elements) {
      ++elements;
      if (!theorem2_check(sub, w)) {
        ok = false;
        std::cout << "  counterexample w = " << format_word(w.canonical_word()) << "\n";
      }
    }
  }
  report("thm2", ok, std::to_string(subgroups) + " parabolic subgroups, " + std::to_string(elements) + " elements");
  return ok;
}

bool check_lemma(const CoxeterSystem& sys) {
  bool ok = true;
  std::size_t count = 0, coxeter = 0;
  for (const auto& w : enumerate_group(sys)) {
    ++count;
    const bool lhs = is_standard_parabolic_coxeter_element(w);
    coxeter += lhs;
    if (lhs != has_distinct_letter_reduced_word(w)) {
      ok = false;
      std::cout << "  counterexample w = " << format_word(w.canonical_word()) << "\n";
    }
  }
  report("lemma21", ok, std::to_string(count) + " elements, " + std::to_string(coxeter) + " with l_T = l");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz action on reflection factorizations in Coxeter groups"};
  app.require_subcommand(1);

  std::string group, fac, word, cword, xword, gens, dot;
  std::size_t budget = 0, radius = 0;
  bool json = false, thm1 = false, thm2 = false, lemma = false;

  auto* orbit = app.add_subcommand("orbit", "Hurwitz orbit of a factorization");
  auto* straight = app.add_subcommand("straighten", "move a reduced factorization to a valley-shaped path");
  auto* braid = app.add_subcommand("braid", "braid carrying a factorization of c to its simple factorization");
  auto* redfac = app.add_subcommand("redfac", "reduced reflection factorizations of an element");
  auto* check = app.add_subcommand("check", "run a verification battery on the group");
  auto* graph = app.add_subcommand("graph", "export a ball of the directed Bruhat graph as DOT");

  for (auto* sub : {orbit, straight, braid, redfac, check, graph})
    sub->add_option("-g,--group", group, "group file")->required();
  for (auto* sub : {orbit, straight, braid})
    sub->add_option("-f,--factorization", fac, "';'-separated reflection words")->required();
  for (auto* sub : {orbit, straight, braid, redfac}) sub->add_flag("--json", json, "JSON output");
  for (auto* sub : {orbit, redfac, check, graph})
    sub->add_option("--budget", budget, "maximal enumerated set size");

  straight->add_option("-x", xword, "start vertex x as a word (default e)");
  braid->add_option("-c", cword, "distinct-letter word of the Coxeter element")->required();
  redfac->add_option("-w,--word", word, "element as a word")->required();
  redfac->add_option("--subgroup", gens, "';'-separated reflection generators of W'");
  auto* f1 = check->add_flag("--thm1", thm1, "orbit of (s_1, ..., s_n) equals Red_T(c), with braids");
  auto* f2 = check->add_flag("--thm2", thm2, "Red_T(w) = Red_T'(w) on standard parabolic subgroups");
  auto* f3 = check->add_flag("--lemma21", lemma, "l_T(w) = l(w) iff a reduced word has distinct letters");
  f1->excludes(f2, f3);
  f2->excludes(f3);
  graph->add_option("--radius", radius, "ball radius in Coxeter length")->required();
  graph->add_option("--dot", dot, "output path, '-' for stdout")->required();
  graph->add_option("--subgroup", gens, "restrict to the subgroup generated by these reflections");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    const CoxeterSystem sys = load_group(group);

    if (*orbit) {
      const auto f = parse_factorization(sys, fac);
      std::vector<Factorization> result;
      bool partial = false;
      try {
        result = hurwitz_orbit(f, set_budget(budget));
      } catch (const OrbitBudgetError& e) {
        result = e.partial();
        partial = true;
      }
      if (json) {
        std::cout << nlohmann::json{{"system", coxeter_matrix_json(sys)},
                                    {"input", factorization_json(f)},
                                    {"complete", !partial},
                                    {"size", result.size()},
                                    {"orbit", factorizations_json(result)}}
                         .dump()
                  << "\n";
      } else {
        print_factorizations(result);
      }
      if (partial) {
        std::cerr << "error: budget: orbit exceeded budget; partial orbit of " << result.size() << " tuples\n";
        return 3;
      }
      return 0;
    }

    if (*straight) {
      const auto f = parse_factorization(sys, fac);
      const Element x = sys.element(parse_word(xword));
      const auto res = straighten(f, x);
      if (json) {
        std::cout << nlohmann::json{{"tuple", factorization_json(res.factorization)},
                                    {"pivot", res.pivot},
                                    {"witness", braid_json(res.witness)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << labelled("tuple", format_factorization(res.factorization)) << "\n"
                  << "pivot: " << res.pivot << "\n"
                  << labelled("witness", format_braid(res.witness)) << "\n";
      }
      return 0;
    }

    if (*braid) {
      const auto f = parse_factorization(sys, fac);
      const Word c = parse_word(cword);
      const auto b = transitivity_braid(f, c);
      const auto result = apply_braid(f, b);
      if (json) {
        std::cout << nlohmann::json{{"braid", braid_json(b)}, {"result", factorization_json(result)}}.dump() << "\n";
      } else {
        std::cout << labelled("braid", format_braid(b)) << "\n"
                  << labelled("result", format_factorization(result)) << "\n";
      }
      return 0;
    }

    if (*redfac) {
      const Element w = sys.element(parse_word(word));
      std::vector<Factorization> red;
      if (gens.empty()) {
        red = red_enumerate(w);
      } else {
        red = red_enumerate(w, load_subgroup(sys, gens, set_budget(budget)));
      }
      if (json) {
        std::cout << nlohmann::json{{"element", word_json(w.canonical_word())},
                                    {"size", red.size()},
                                    {"factorizations", factorizations_json(red)}}
                         .dump()
                  << "\n";
      } else {
        print_factorizations(red);
      }
      return 0;
    }

    if (*check) {
      if (!thm1 && !thm2 && !lemma) throw ContractError("check needs one of --thm1, --thm2, --lemma21");
      if (!sys.is_finite()) throw UnsupportedError("verification batteries need a finite Coxeter group");
      bool ok;
      if (thm1) ok = check_thm1(sys, set_budget(budget));
      else if (thm2) ok = check_thm2(sys, set_budget(budget));
      else ok = check_lemma(sys);
      return ok ? 0 : 1;
    }

    if (*graph) {
      BruhatGraph g = directed_ball(sys, radius);
      if (!gens.empty()) g = restrict_to_subgroup(g, load_subgroup(sys, gens, set_budget(budget)));
      if (dot == "-") {
        write_dot(std::cout, g);
      } else {
        std::ofstream out(dot);
        if (!out) throw ContractError("cannot write '" + dot + "'");
        write_dot(out, g);
        std::cout << "vertices " << g.vertices().size() << "\nedges " << g.edges().size() << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << group << ": " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    std::cerr << "error: contract: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "error: budget: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

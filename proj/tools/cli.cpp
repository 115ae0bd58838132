#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "positroid/error.hpp"
#include "positroid/facets.hpp"
#include "positroid/flats.hpp"
#include "positroid/oracle.hpp"
#include "positroid/positroid.hpp"
#include "positroid/rank.hpp"
#include "positroid/verify.hpp"

namespace positroid::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputOptions {
  std::string perm;
  std::string necklace;
  std::string file;
};

struct Options {
  InputOptions input;
  bool json = false;
  std::string set;
  std::string method = "push";
  bool trace = false;
  std::string system = "minimal";
  bool prune = false;
  int exhaustive_limit = VerifyOptions{}.exhaustive_limit;
  std::uint64_t samples = VerifyOptions{}.samples;
  std::uint64_t verify_seed = VerifyOptions{}.seed;
  int random_n = 0;
  std::uint64_t random_seed = 0;
};

Json labels(Subset s) { return Json(s.labels()); }

std::string read_source(const InputOptions& input, std::istream& in) {
  if (!input.perm.empty()) return input.perm;
  if (!input.necklace.empty()) return input.necklace;
  if (input.file.empty() || input.file == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(input.file);
  if (!file) throw InputError("cannot open '" + input.file + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// Necklace text is recognised by its braces.
bool looks_like_necklace(const InputOptions& input, const std::string& text) {
  if (!input.perm.empty()) return false;
  if (!input.necklace.empty()) return true;
  return text.find('{') != std::string::npos;
}

Positroid load_positroid(const InputOptions& input, std::istream& in) {
  const std::string text = read_source(input, in);
  if (looks_like_necklace(input, text)) return Positroid(GrassmannNecklace::parse(text));
  return Positroid(DecoratedPermutation::parse(text));
}

Subset load_set(const Positroid& p, const Options& options) {
  return parse_subset(p.ground(), options.set);
}

Json decorations_json(const DecoratedPermutation& perm) {
  Json out = Json::array();
  for (int i = 1; i <= perm.size(); ++i) {
    switch (perm.decoration(i)) {
      case Decoration::kNone: out.push_back(nullptr); break;
      case Decoration::kWhite: out.push_back("white"); break;
      case Decoration::kBlack: out.push_back("black"); break;
    }
  }
  return out;
}

int do_necklace(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  if (!o.json) {
    out << p.necklace().to_string() << '\n';
    return kOk;
  }
  Json sets = Json::array();
  for (int k = 1; k <= p.size(); ++k) sets.push_back(p.ground().ordered(p.necklace_at(k), k));
  out << Json{{"n", p.size()}, {"d", p.rank()}, {"necklace", sets}}.dump(2) << '\n';
  return kOk;
}

int do_perm(const Options& o, std::istream& in, std::ostream& out) {
  if (!o.input.perm.empty()) throw InputError("perm reads a necklace; use --necklace, --file or stdin");
  const std::string text = read_source(o.input, in);
  const DecoratedPermutation perm = permutation_from_necklace(GrassmannNecklace::parse(text));
  if (!o.json) {
    out << perm.to_string() << '\n';
    return kOk;
  }
  out << Json{{"n", perm.size()},
              {"permutation", perm.to_string()},
              {"images", perm.images()},
              {"decorations", decorations_json(perm)}}
             .dump(2)
      << '\n';
  return kOk;
}

int do_bases(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  const auto bases = enumerate_bases(p);
  if (!o.json) {
    for (Subset b : bases) out << to_string(b) << '\n';
    return kOk;
  }
  Json list = Json::array();
  for (Subset b : bases) list.push_back(labels(b));
  out << Json{{"n", p.size()}, {"d", p.rank()}, {"count", bases.size()}, {"bases", list}}.dump(2) << '\n';
  return kOk;
}

int do_rank(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  const Subset e = load_set(p, o);
  p.require_fixed_point_free("rank");
  int value = 0;
  std::optional<PushResult> pushed;
  if (o.method == "oracle") {
    value = oracle_rank(OracleMatroid::from_positroid(p), e);
  } else if (o.method == "ncp") {
    value = rank(p, e, RankMethod::kNonCrossing);
  } else {
    value = rank(p, e, RankMethod::kPush);
    if (o.trace && p.ground().decompose(e).proper()) pushed = push_procedure(p, e);
  }
  if (!o.json) {
    out << value << '\n';
    if (pushed) {
      for (const PushState& s : pushed->trace) out << "H" << s.step << ' ' << to_string(s.basis) << '\n';
    }
    return kOk;
  }
  Json doc{{"set", labels(e)}, {"method", o.method}, {"rank", value}};
  if (pushed) {
    Json trace = Json::array();
    for (const PushState& s : pushed->trace) trace.push_back({{"step", s.step}, {"basis", labels(s.basis)}});
    doc["trace"] = trace;
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

int do_closure(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  const Subset e = load_set(p, o);
  const Subset c = closure(p, e);
  if (!o.json) {
    out << to_string(c) << '\n';
    return kOk;
  }
  Json doc{{"set", labels(e)}, {"closure", labels(c)}, {"rank", rank(p, e)}};
  if (!e.empty()) {
    const FlatnessVerdict verdict = is_flat(p, e);
    doc["flat"] = verdict.flat;
    doc["flat_by"] = verdict.by_criterion ? "criterion" : "closure";
  } else {
    doc["flat"] = c.empty();
    doc["flat_by"] = "closure";
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

int do_interval_flats(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  const auto flats = interval_flats(p);
  if (!o.json) {
    for (const CyclicInterval& iv : flats) out << '[' << iv.first << ',' << iv.last << "]\n";
    return kOk;
  }
  Json list = Json::array();
  for (const CyclicInterval& iv : flats) {
    list.push_back({{"first", iv.first}, {"last", iv.last}, {"rank", interval_rank(p, iv)}});
  }
  out << Json{{"n", p.size()}, {"intervals", list}}.dump(2) << '\n';
  return kOk;
}

int do_flats(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  const auto flats = enumerate_inseparable_flats(p);
  if (!o.json) {
    for (const FlatRecord& f : flats) out << f.rank << ' ' << to_string(f.members) << '\n';
    return kOk;
  }
  Json list = Json::array();
  for (const FlatRecord& f : flats) list.push_back({{"members", labels(f.members)}, {"rank", f.rank}});
  out << Json{{"n", p.size()}, {"d", p.rank()}, {"flats", list}}.dump(2) << '\n';
  return kOk;
}

Json system_json(const FacetSystem& system) {
  auto sense = [](Sense s) {
    switch (s) {
      case Sense::kLe: return "le";
      case Sense::kGe: return "ge";
      case Sense::kEq: return "eq";
    }
    return "?";
  };
  Json rows = Json::array();
  auto emit = [&](const Inequality& ineq) {
    rows.push_back({{"sense", sense(ineq.sense)}, {"rhs", ineq.rhs}, {"support", labels(ineq.support)}});
  };
  for (const auto& eq : system.equalities) emit(eq);
  for (const auto& ineq : system.inequalities) emit(ineq);
  return Json{{"n", system.n}, {"d", system.d}, {"constraints", rows}};
}

int emit_system(const Options& o, const FacetSystem& system, std::ostream& out) {
  if (o.json) {
    out << system_json(system).dump(2) << '\n';
  } else {
    out << to_hrep(system);
  }
  return kOk;
}

int do_facets(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  const auto which = o.system == "intersections" ? IndependentSystem::kIntervalFlatIntersections
                                                 : IndependentSystem::kInseparableFlats;
  return emit_system(o, independent_set_facets(p, which), out);
}

int do_basis_polytope(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  return emit_system(o, basis_polytope_system(p, o.prune), out);
}

int do_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Positroid p = load_positroid(o.input, in);
  VerifyOptions options;
  options.exhaustive_limit = o.exhaustive_limit;
  options.samples = o.samples;
  options.seed = o.verify_seed;
  const VerifyReport report = verify_suite(p, options);
  const auto failed = std::ranges::count_if(report.checks, [](const CheckResult& c) { return !c.passed; });
  if (o.json) {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
      Json row{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
      if (!c.passed) row["counterexample"] = c.counterexample;
      checks.push_back(row);
    }
    out << Json{{"passed", report.passed()}, {"checks", checks}, {"warnings", report.warnings}}.dump(2) << '\n';
  } else {
    for (const std::string& w : report.warnings) out << "warning: " << w << '\n';
    for (const CheckResult& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.passed) out << ": " << c.counterexample;
      out << '\n';
    }
    if (failed == 0) {
      out << "all " << report.checks.size() << " checks passed\n";
    } else {
      out << failed << " of " << report.checks.size() << " checks failed\n";
    }
  }
  return failed == 0 ? kOk : kCheckFailed;
}

int do_random(const Options& o, std::ostream& out) {
  const DecoratedPermutation perm = random_derangement(o.random_n, o.random_seed);
  if (!o.json) {
    out << perm.to_string() << '\n';
    return kOk;
  }
  out << Json{{"n", perm.size()}, {"seed", o.random_seed}, {"permutation", perm.to_string()}}.dump(2) << '\n';
  return kOk;
}

void add_input(CLI::App* sub, Options& o) {
  auto* perm = sub->add_option("-p,--perm", o.input.perm, "decorated permutation, e.g. \"3 4 1 2\" or \"2 1 3b\"");
  auto* neck = sub->add_option("-N,--necklace", o.input.necklace, "Grassmann necklace, e.g. \"{1,2} {2,3} {3,4} {4,1}\"");
  auto* file = sub->add_option("-f,--file", o.input.file, "read input from a file ('-' for stdin)");
  perm->excludes(neck)->excludes(file);
  neck->excludes(file);
  sub->add_flag("--json", o.json, "structured output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positroids from decorated permutations: ranks, closures, flats and facet systems."};
  app.name("positroid");
  app.require_subcommand(1, 1);
  Options o;

  auto* necklace = app.add_subcommand("necklace", "print the Grassmann necklace I_1 .. I_n");
  add_input(necklace, o);
  auto* perm = app.add_subcommand("perm", "decorated permutation of a Grassmann necklace");
  add_input(perm, o);
  auto* bases = app.add_subcommand("bases", "list every basis in lexicographic order");
  add_input(bases, o);

  auto* rank_cmd = app.add_subcommand("rank", "rank of a subset");
  add_input(rank_cmd, o);
  rank_cmd->add_option("-s,--set", o.set, "subset, e.g. 1..3,8..10")->required();
  rank_cmd->add_option("-m,--method", o.method, "push, ncp or oracle")
      ->check(CLI::IsMember({"push", "ncp", "oracle"}));
  rank_cmd->add_flag("--trace", o.trace, "print the push procedure bases H1 .. Hk");

  auto* closure_cmd = app.add_subcommand("closure", "closure of a subset");
  add_input(closure_cmd, o);
  closure_cmd->add_option("-s,--set", o.set, "subset, e.g. 1,2,3")->required();

  auto* iflats = app.add_subcommand("interval-flats", "every cyclic interval that is a flat");
  add_input(iflats, o);
  auto* flats = app.add_subcommand("flats", "inseparable flats with their ranks");
  add_input(flats, o);

  auto* facets = app.add_subcommand("facets", "H-representation of the independent set polytope");
  add_input(facets, o);
  facets->add_option("--system", o.system, "minimal (inseparable flats) or intersections (all interval flat intersections)")
      ->check(CLI::IsMember({"minimal", "intersections"}));

  auto* polytope = app.add_subcommand("basis-polytope", "H-representation of the basis polytope");
  add_input(polytope, o);
  polytope->add_flag("--prune", o.prune, "drop interval bounds dominated by a wider one");

  auto* verify = app.add_subcommand("verify", "check every fast computation against the brute-force oracle");
  add_input(verify, o);
  verify->add_option("--exhaustive-limit", o.exhaustive_limit, "largest n swept exhaustively");
  verify->add_option("--samples", o.samples, "subsets sampled above the limit");
  verify->add_option("--seed", o.verify_seed, "sampling seed");

  auto* random = app.add_subcommand("random", "random fixed-point-free permutation");
  random->add_option("-n,--n", o.random_n, "ground set size")->required();
  random->add_option("--seed", o.random_seed, "seed")->required();
  random->add_flag("--json", o.json, "structured output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'positroid --help' for usage\n";
    return kBadInput;
  }

  try {
    auto* chosen = app.get_subcommands().front();
    if (chosen == necklace) return do_necklace(o, in, out);
    if (chosen == perm) return do_perm(o, in, out);
    if (chosen == bases) return do_bases(o, in, out);
    if (chosen == rank_cmd) return do_rank(o, in, out);
    if (chosen == closure_cmd) return do_closure(o, in, out);
    if (chosen == iflats) return do_interval_flats(o, in, out);
    if (chosen == flats) return do_flats(o, in, out);
    if (chosen == facets) return do_facets(o, in, out);
    if (chosen == polytope) return do_basis_polytope(o, in, out);
    if (chosen == verify) return do_verify(o, in, out);
    return do_random(o, out);
  } catch (const NecklaceError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ContractError& e) {
    err << "internal error: " << e.what() << '\n';
    return kContract;
  } catch (const FixedPointError& e) {
    err << "error: " << e.what() << '\n';
    return kFixedPoint;
  }
}

}  // namespace positroid::cli

// schur: command-line front end for the Schur degree library.
//
// Exit codes: 0 ok, 1 mismatch / invalid certificate, 2 budget exceeded,
// 3 input error.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schur/bounds.hpp"
#include "schur/cnf.hpp"
#include "schur/fixtures.hpp"
#include "schur/io.hpp"
#include "schur/ramsey_bridge.hpp"
#include "schur/search.hpp"
#include "schur/solver.hpp"

namespace {

using namespace schur;

constexpr int kOk = 0, kMismatch = 1, kBudget = 2, kInput = 3;

struct BudgetFlags {
  std::uint64_t nodes = 0;
  double secs = 0;

  void add_to(CLI::App* app, const std::string& what = "") {
    app->add_option("--budget-nodes", nodes, "node limit" + what + " (0 = none)");
    app->add_option("--budget-secs", secs, "wall-clock limit in seconds" + what + " (0 = none)");
  }
  Budget budget() const {
    Budget b;
    if (nodes) b.max_nodes = nodes;
    if (secs > 0) b.max_seconds = secs;
    return b;
  }
};

ParsedInput load_input(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_input(text);
  }
  return parse_input(read_json_file(path));
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::string data_file(const std::string& name) { return std::string(SCHUR_DATA_DIR) + "/" + name; }

Json triple_json(const SchurTriple& t) { return Json{{"x", to_json(t.x)}, {"y", to_json(t.y)}, {"z", to_json(t.z)}}; }

Json degree_json(const DegreeResult& r) {
  Json j;
  switch (r.status) {
    case DegreeStatus::exact: j["status"] = "exact"; break;
    case DegreeStatus::infinite: j["status"] = "infinite"; break;
    case DegreeStatus::budget_exceeded: j["status"] = "budget_exceeded"; break;
  }
  j["degree"] = r.degree ? Json(*r.degree) : r.status == DegreeStatus::infinite ? Json("infinity") : Json(nullptr);
  j["lower_bound"] = r.lower_bound;
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  if (r.unsat_below) j["unsat_below"] = to_json(*r.unsat_below);
  j["levels"] = Json::array();
  for (const auto& s : r.levels) j["levels"].push_back(to_json(s));
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

Json report_json(const ClassicalReport& rep) {
  auto iv = [](const Interval& i) {
    return Json{{"lo", i.lo ? to_json(*i.lo) : Json(nullptr)}, {"hi", i.hi ? to_json(*i.hi) : Json(nullptr)}, {"sources", i.sources}};
  };
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back(Json{{"name", c.name},
                          {"statement", c.statement},
                          {"lhs", iv(c.lhs)},
                          {"rhs", iv(c.rhs)},
                          {"verdict", to_string(c.verdict)},
                          {"constants", c.constants}});
  Json j{{"n", rep.n}, {"schur", iv(rep.schur)}, {"ramsey", iv(rep.ramsey)}, {"checks", checks}};
  if (rep.n >= 2) {
    auto row = conjecture_recursion(rep.n);
    j["recursion"] = Json{{"value", to_json(row.bound.value)}, {"assumes", row.bound.assumes}, {"verdict", to_string(row.verdict)}};
    j["length_bracket"] = iv(length_bracket(rep.n));
    auto gap = equality_gap_rule(rep.n);
    j["L_exact"] = gap ? Json(*gap) : Json(nullptr);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur degree of finite subsets of Z^d"};
  app.require_subcommand(1);
  int code = kOk;

  // sd
  std::string input;
  int max_n = 64;
  unsigned parallel = 1;
  BudgetFlags budget;
  auto* sd = app.add_subcommand("sd", "Schur degree with certificate");
  sd->add_option("--input", input, "JSON {\"set\": ...} or {\"seq\": ...} (- for stdin)")->required();
  sd->add_option("--max-n", max_n, "largest n tried")->check(CLI::Range(1, 64));
  sd->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1u, 256u));
  budget.add_to(sd);
  sd->callback([&] {
    auto x = input_set(load_input(input));
    auto r = schur_degree(x, SolveOptions{budget.budget(), parallel}, max_n);
    emit(degree_json(r));
    if (r.status == DegreeStatus::budget_exceeded) code = kBudget;
  });

  auto* bs = app.add_subcommand("blocksums", "block sums of a sequence");
  bs->add_option("--input", input, "JSON {\"seq\": ...}")->required();
  bs->callback([&] {
    auto in = load_input(input);
    const auto* s = std::get_if<Sequence>(&in);
    if (!s) throw ParseError("blocksums needs a sequence", "$.seq");
    emit(to_json(block_sums(*s)));
  });

  auto* dl = app.add_subcommand("delta", "successive gaps of an integer set");
  dl->add_option("--input", input, "JSON {\"set\": ...} in Z")->required();
  dl->callback([&] {
    auto in = load_input(input);
    const auto* s = std::get_if<ElementSet>(&in);
    if (!s) throw ParseError("delta needs a set", "$.set");
    emit(to_json(delta(*s)));
  });

  auto* tr = app.add_subcommand("triples", "Schur triples x + y = z with x <= y, as JSON lines");
  tr->add_option("--input", input, "JSON set or sequence")->required();
  tr->callback([&] {
    for (const auto& t : schur_triples(input_set(load_input(input))).triples()) emit(triple_json(t));
  });

  int colors = 2;
  std::size_t limit = 0;
  auto* ec_cmd = app.add_subcommand("enumerate-covers", "all sumfree n-colorings up to color permutation, as JSON lines");
  ec_cmd->add_option("--input", input, "JSON set or sequence")->required();
  ec_cmd->add_option("--n", colors, "colors")->required()->check(CLI::Range(1, 64));
  ec_cmd->add_option("--limit", limit, "stop after this many (0 = all)");
  budget.add_to(ec_cmd);
  ec_cmd->callback([&] {
    auto x = input_set(load_input(input));
    std::size_t count = 0;
    bool truncated = false;
    try {
      enumerate_covers(
          x, colors,
          [&](const Coloring& c) {
            emit(certificate_to_json(c));
            ++count;
            if (limit && count >= limit) {
              truncated = true;
              return false;
            }
            return true;
          },
          budget.budget());
    } catch (const BudgetExceeded&) {
      emit(Json{{"count", count}, {"complete", false}, {"reason", "budget_exceeded"}});
      code = kBudget;
      return;
    }
    emit(Json{{"count", count}, {"complete", !truncated}});
  });

  bool at_most_one = false, no_symmetry = false;
  std::string out;
  auto* cnf = app.add_subcommand("cnf-export", "DIMACS CNF for \"X admits a sumfree n-coloring\"");
  cnf->add_option("--input", input, "JSON set or sequence")->required();
  cnf->add_option("--n", colors, "colors")->required()->check(CLI::Range(1, 64));
  cnf->add_flag("--at-most-one", at_most_one, "add pairwise at-most-one clauses");
  cnf->add_flag("--no-symmetry", no_symmetry, "omit the color symmetry-breaking units");
  cnf->add_option("--out", out, "output file (default stdout)");
  cnf->callback([&] {
    auto doc = export_cnf(input_set(load_input(input)), colors, CnfOptions{at_most_one, !no_symmetry});
    if (out.empty()) {
      std::cout << doc.to_dimacs();
    } else {
      std::ofstream f(out);
      if (!f) throw std::runtime_error("cannot write " + out);
      f << doc.to_dimacs();
    }
  });

  std::string cert, model;
  auto* vc = app.add_subcommand("verify-cert", "check a coloring certificate or a SAT solver model");
  vc->add_option("--input", input, "JSON set or sequence")->required();
  auto* cert_opt = vc->add_option("--cert", cert, "certificate JSON {\"n\", \"classes\"}");
  auto* model_opt = vc->add_option("--model", model, "SAT solver output for a cnf-export of the same input");
  vc->add_option("--n", colors, "colors (with --model)");
  cert_opt->excludes(model_opt);
  vc->callback([&] {
    auto x = input_set(load_input(input));
    if (cert.empty() && model.empty()) throw ParseError("give --cert or --model", "arguments");
    Coloring c;
    if (!cert.empty()) {
      c = certificate_from_json(read_json_file(cert), x);
    } else {
      std::ifstream f(model);
      if (!f) throw ParseError("cannot open file", model);
      std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      try {
        c = import_model(x, colors, text);
      } catch (const VerificationError& e) {
        emit(Json{{"valid", false}, {"error", e.what()}});
        code = kMismatch;
        return;
      }
    }
    if (!c.is_total()) {
      emit(Json{{"valid", false}, {"error", "certificate does not cover the set"}});
      code = kMismatch;
      return;
    }
    auto v = verify_coloring(x, c);
    Json j{{"valid", v.valid}, {"n", c.n()}, {"size", x.size()}};
    if (v.violation) j["violation"] = Json{{"color", v.color}, {"triple", triple_json(*v.violation)}};
    emit(j);
    if (!v.valid) code = kMismatch;
  });

  std::string ec_file;
  auto* vec = app.add_subcommand("verify-ec", "exhaustive monochromatic-triangle check of an edge coloring");
  vec->add_option("--file", ec_file, "edge coloring JSON {\"V\", \"n\", \"edges\"}")->required();
  vec->callback([&] {
    std::string path = ec_file;
    if (!std::filesystem::exists(path) && std::filesystem::exists(data_file(path))) path = data_file(path);
    auto ec = edge_coloring_from_json(read_json_file(path));
    auto tri = ec.monochromatic_triangle();
    Json j{{"V", ec.vertices()}, {"n", ec.colors()}, {"triangles_checked", ec.triangle_count()}, {"triangle_free", !tri}};
    if (tri) j["monochromatic"] = *tri;
    emit(j);
    if (tri) code = kMismatch;
  });

  auto* tp = app.add_subcommand("transport", "pull a triangle-free edge coloring back to the block sums of a sequence");
  tp->add_option("--input", input, "JSON {\"seq\": ...}")->required();
  tp->add_option("--ec", ec_file, "edge coloring JSON; default: built-in for --n");
  tp->add_option("--n", colors, "colors for the built-in coloring")->check(CLI::Range(1, 3));
  tp->callback([&] {
    auto in = load_input(input);
    const auto* s = std::get_if<Sequence>(&in);
    if (!s) throw ParseError("transport needs a sequence", "$.seq");
    EdgeColoring ec = ec_file.empty() ? triangle_free_coloring(static_cast<int>(s->size()) + 1, colors)
                                      : edge_coloring_from_json(read_json_file(ec_file));
    emit(certificate_to_json(transport_coloring(*s, ec)));
  });

  int ln = 3;
  std::size_t length = 5;
  std::string resume, findings_dir;
  BudgetFlags instance;
  auto* sl = app.add_subcommand("search-L", "check that every length-l sequence of average <= n has sd >= n");
  sl->add_option("--n", ln, "n")->check(CLI::Range(2, 64));
  sl->add_option("--length", length, "sequence length")->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  sl->add_option("--resume", resume, "continue a saved run");
  sl->add_option("--out", out, "run file, rewritten after every batch");
  sl->add_option("--findings-dir", findings_dir, "write each counterexample as a certificate file here");
  sl->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1u, 256u));
  sl->add_flag("--no-stop", no_symmetry, "keep going after a counterexample");
  budget.add_to(sl, " for this invocation (nodes = sequences)");
  sl->add_option("--instance-nodes", instance.nodes, "solver node limit per sequence (0 = none)");
  sl->callback([&] {
    SearchRun run;
    if (!resume.empty()) {
      run = search_run_from_json(read_json_file(resume));
      if (out.empty()) out = resume;
    } else {
      run.spec = {ln, length, instance.budget()};
      run.spec.validate();
    }
    LSearchOptions o;
    o.run_budget = budget.budget();
    o.workers = parallel;
    o.stop_on_counterexample = !no_symmetry;
    if (!out.empty()) o.checkpoint = [&](const SearchRun& r) { write_json_file(out, to_json(r)); };
    verify_L_lower(run, o);
    if (!findings_dir.empty()) {
      std::filesystem::create_directories(findings_dir);
      for (std::size_t i = 0; i < run.counterexamples.size(); ++i)
        write_json_file(findings_dir + "/counterexample_" + std::to_string(i) + ".json", finding_to_json(run.counterexamples[i]));
    }
    emit(to_json(run));
    if (run.status == RunStatus::budget_exceeded || run.status == RunStatus::inconclusive) code = kBudget;
  });

  HuntOptions hunt;
  std::uint64_t evals = 0;
  double hunt_secs = 0;
  std::vector<std::string> seed_files;
  auto* hn = app.add_subcommand("hunt", "randomized search for sequences with small Schur degree, findings as JSON lines");
  hn->add_option("--length", hunt.length, "sequence length");
  hn->add_option("--target", hunt.target, "wanted sd upper bound")->check(CLI::Range(1, 64));
  hn->add_option("--seed", hunt.seed, "RNG seed");
  hn->add_option("--budget-secs", hunt_secs, "wall-clock limit");
  hn->add_option("--budget-evals", evals, "candidate evaluations (default 2000 when no time limit is given)");
  hn->add_option("--max-entry", hunt.max_entry, "largest sequence entry");
  hn->add_option("--parallel", hunt.workers, "worker threads")->check(CLI::Range(1u, 256u));
  hn->add_option("--seed-seq", seed_files, "JSON sequence files evaluated first");
  hn->add_option("--findings-dir", findings_dir, "write each finding as a certificate file here");
  hn->callback([&] {
    if (hunt_secs > 0 || evals) {
      hunt.budget = Budget{};
      if (evals) hunt.budget.max_nodes = evals;
      if (hunt_secs > 0) hunt.budget.max_seconds = hunt_secs;
    }
    for (const auto& f : seed_files) {
      auto in = parse_input(read_json_file(f));
      const auto* s = std::get_if<Sequence>(&in);
      if (!s) throw ParseError("seed file must hold a sequence", f);
      hunt.seeds.push_back(*s);
    }
    if (!findings_dir.empty()) std::filesystem::create_directories(findings_dir);
    std::size_t k = 0;
    auto found = hunt_exotic(hunt, [&](const HuntFinding& f) {
      emit(to_json(f));
      if (!findings_dir.empty()) write_json_file(findings_dir + "/finding_" + std::to_string(k++) + ".json", to_json(f));
    });
    std::size_t critical = 0;
    for (const auto& f : found) critical += f.critical;
    emit(Json{{"findings", found.size()}, {"critical", critical}, {"seed", hunt.seed}});
  });

  int bn = 4;
  bool as_json = false;
  auto* bd = app.add_subcommand("bounds", "classical bounds on S(n) and R_n(3)");
  bd->add_option("--n", bn, "n")->check(CLI::Range(1, 200));
  bd->add_flag("--json", as_json, "full JSON report");
  bd->callback([&] {
    auto rep = check_classical_bounds(bn);
    if (as_json) {
      emit(report_json(rep));
      return;
    }
    std::cout << "S(" << bn << ") in " << rep.schur.to_string() << ", R_" << bn << "(3) in " << rep.ramsey.to_string() << '\n';
    for (const auto& c : rep.checks) std::cout << "  " << c.statement << ": " << to_string(c.verdict) << '\n';
  });

  std::string filter, profile = "quick";
  auto* vp = app.add_subcommand("verify-paper", "run the bundled reproduction fixtures");
  vp->add_option("--filter", filter, "only fixtures whose id contains this");
  vp->add_option("--profile", profile, "quick or long")->check(CLI::IsMember({"quick", "long"}));
  vp->add_option("--out", out, "also write the report here");
  vp->callback([&] {
    auto rep = verify_paper(filter, profile, [](const PaperFixture& f, const FixtureResult& r) {
      std::cerr << to_string(r.status) << "  " << f.id << "  (" << r.seconds << " s)";
      if (!r.detail.empty()) std::cerr << "  " << r.detail;
      std::cerr << '\n';
    });
    if (!out.empty()) write_json_file(out, rep.json);
    emit(rep.json);
    code = rep.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  } catch (const ParseError& e) {
    std::cerr << "input error at " << e.where() << ": " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return code;
}

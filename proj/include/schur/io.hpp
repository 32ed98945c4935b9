#pragma once

// JSON forms of the domain objects.
//
//   element      [c_1, ..., c_d]; in inputs also an integer (d = 1) or the
//                shorthand "x", "x+k", "x-k", "k+x" (d = 2, meaning (k, 1))
//   sequence     {"seq": [element, ...]}
//   set          {"set": [element, ...]}
//   certificate  {"n": n, "classes": [[element, ...], ...]}
//   edge colors  {"V": V, "n": n, "edges": [[i, j, c], ...]}
//
// Integers that do not fit in 64 bits are written as decimal strings.

#include <fstream>
#include <limits>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "schur/algebra.hpp"
#include "schur/ramsey_bridge.hpp"
#include "schur/search.hpp"
#include "schur/solver.hpp"

namespace schur {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars and elements

inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    static const std::regex digits(R"(^-?[0-9]+$)");
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump(), where);
}

inline Json to_json(const GroupElement& x) {
  Json a = Json::array();
  for (const auto& c : x.coords()) a.push_back(to_json(c));
  return a;
}

namespace detail {

struct Shorthand {
  Integer constant, x_coeff;
};

inline std::optional<Shorthand> parse_x_shorthand(const std::string& s) {
  static const std::regex pat(R"(^\s*(?:([+-]?[0-9]+)\s*\+\s*)?([+-]?[0-9]*)\s*x\s*(?:([+-])\s*([0-9]+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, pat)) return std::nullopt;
  Shorthand out{0, 1};
  if (m[1].matched) out.constant = Integer(m[1].str());
  std::string coeff = m[2].str();
  if (coeff == "-") out.x_coeff = -1;
  else if (!coeff.empty() && coeff != "+") out.x_coeff = Integer(coeff);
  if (m[3].matched) {
    Integer k(m[4].str());
    out.constant += m[3].str() == "-" ? Integer(-k) : k;
  }
  return out;
}

}  // namespace detail

/// Parses a list of elements, inferring the dimension unless `dim` is given.
inline std::vector<GroupElement> parse_elements(const Json& arr, const std::string& where, std::size_t dim = 0) {
  if (!arr.is_array()) throw ParseError("expected an array of elements", where);
  std::size_t array_dim = 0;
  bool has_x = false, has_int = false;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& it = arr[i];
    const std::string pos = where + "[" + std::to_string(i) + "]";
    if (it.is_array()) {
      if (it.empty()) throw ParseError("empty coordinate vector", pos);
      if (array_dim && array_dim != it.size()) throw ParseError("mixed dimensions", pos);
      array_dim = it.size();
    } else if (it.is_string() && detail::parse_x_shorthand(it.get<std::string>())) {
      has_x = true;
    } else if (it.is_number_integer() || it.is_string()) {
      has_int = true;
    } else {
      throw ParseError("expected an integer, a coordinate array or an x-shorthand, got " + it.dump(), pos);
    }
  }
  std::size_t d = dim ? dim : array_dim ? array_dim : has_x ? 2 : 1;
  if ((array_dim && array_dim != d) || (has_x && d != 2) || (has_int && d != 1 && !has_x && !dim))
    throw ParseError("mixed dimensions", where);

  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& it = arr[i];
    const std::string pos = where + "[" + std::to_string(i) + "]";
    if (it.is_array()) {
      std::vector<Integer> c;
      for (std::size_t k = 0; k < it.size(); ++k) c.push_back(integer_from_json(it[k], pos + "[" + std::to_string(k) + "]"));
      out.emplace_back(std::move(c));
      continue;
    }
    if (it.is_string()) {
      if (auto sh = detail::parse_x_shorthand(it.get<std::string>())) {
        if (d != 2) throw ParseError("x-shorthand needs dimension 2", pos);
        out.emplace_back(std::vector<Integer>{sh->constant, sh->x_coeff});
        continue;
      }
    }
    if (d > 2) throw ParseError("plain integer in a dimension-" + std::to_string(d) + " list", pos);
    std::vector<Integer> c(d);
    c[0] = integer_from_json(it, pos);
    out.emplace_back(std::move(c));
  }
  return out;
}

using ParsedInput = std::variant<Sequence, ElementSet>;

/// {"seq": [...]} or {"set": [...]}; both must be nonempty.
inline ParsedInput parse_input(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input must be a JSON object with a \"seq\" or \"set\" key", "$");
  const bool is_seq = doc.contains("seq"), is_set = doc.contains("set");
  if (is_seq == is_set) throw ParseError("input needs exactly one of \"seq\" or \"set\"", "$");
  const std::string key = is_seq ? "seq" : "set";
  const Json& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError("expected an array", "$." + key);
  if (arr.empty()) throw ParseError("empty " + key, "$." + key);
  auto elems = parse_elements(arr, "$." + key);
  std::size_t d = elems.front().dim();
  if (is_seq) return Sequence(std::move(elems), d);
  return ElementSet(std::move(elems), d);
}

inline ParsedInput parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  return parse_input(doc);
}

inline ParsedInput parse_input(const char* text) { return parse_input(std::string(text)); }

/// The set an input denotes: the set itself, or the block sums of a sequence.
inline ElementSet input_set(const ParsedInput& in) {
  if (const auto* s = std::get_if<Sequence>(&in)) return block_sums(*s);
  return std::get<ElementSet>(in);
}

inline Json elements_to_json(const std::vector<GroupElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}
inline Json to_json(const Sequence& s) { return Json{{"seq", elements_to_json(s.entries())}}; }
inline Json to_json(const ElementSet& s) { return Json{{"set", elements_to_json(s.elements())}}; }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), path + ": byte " + std::to_string(e.byte));
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Certificates

inline Json certificate_to_json(const Coloring& c) {
  Json classes = Json::array();
  for (const auto& cls : c.classes()) classes.push_back(elements_to_json(cls.elements()));
  return Json{{"n", c.n()}, {"classes", classes}};
}

/// Reads {"n", "classes"} against the ground set `x` (overlapping classes are
/// refined to the least class).
inline Coloring certificate_from_json(const Json& j, const ElementSet& x) {
  if (!j.is_object() || !j.contains("n") || !j.contains("classes")) throw ParseError("certificate needs \"n\" and \"classes\"", "$");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw ParseError("n must be a positive integer", "$.n");
  const int n = j["n"].get<int>();
  const Json& cls = j["classes"];
  if (!cls.is_array()) throw ParseError("classes must be an array", "$.classes");
  std::vector<ElementSet> classes;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    auto elems = parse_elements(cls[i], "$.classes[" + std::to_string(i) + "]", x.dim());
    classes.emplace_back(std::move(elems), x.dim());
  }
  return Coloring::from_classes(x, classes, n);
}

// ---------------------------------------------------------------------------
// Edge colorings

inline Json to_json(const EdgeColoring& ec) {
  Json edges = Json::array();
  for (auto [i, j, c] : ec.edges()) edges.push_back({i, j, c});
  return Json{{"V", ec.vertices()}, {"n", ec.colors()}, {"edges", edges}};
}

inline EdgeColoring edge_coloring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("V") || !j.contains("n") || !j.contains("edges"))
    throw ParseError("edge coloring needs \"V\", \"n\" and \"edges\"", "$");
  EdgeColoring ec(j["V"].get<int>(), j["n"].get<int>());
  const Json& edges = j["edges"];
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Json& e = edges[k];
    const std::string pos = "$.edges[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 3) throw ParseError("edge must be [i, j, color]", pos);
    try {
      ec.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    } catch (const DomainError& err) {
      throw ParseError(err.what(), pos);
    } catch (const Json::exception& err) {
      throw ParseError(err.what(), pos);
    }
  }
  if (!ec.is_total()) throw ParseError("edge coloring does not color every edge of K_V", "$.edges");
  return ec;
}

// ---------------------------------------------------------------------------
// Budgets and runs

inline Json to_json(const Budget& b) {
  Json j = Json::object();
  j["max_nodes"] = b.max_nodes == std::numeric_limits<std::uint64_t>::max() ? Json(nullptr) : Json(b.max_nodes);
  j["max_seconds"] = std::isfinite(b.max_seconds) ? Json(b.max_seconds) : Json(nullptr);
  return j;
}

inline Budget budget_from_json(const Json& j) {
  Budget b;
  if (j.contains("max_nodes") && !j["max_nodes"].is_null()) b.max_nodes = j["max_nodes"].get<std::uint64_t>();
  if (j.contains("max_seconds") && !j["max_seconds"].is_null()) b.max_seconds = j["max_seconds"].get<double>();
  return b;
}

inline Json to_json(const SolveStats& s) {
  return Json{{"nodes", s.nodes},
              {"backtracks", s.backtracks},
              {"elapsed_seconds", s.elapsed_seconds},
              {"parallel", s.parallel},
              {"workers", s.workers}};
}

inline Json composition_to_json(const Composition& c) { return Json(c); }

inline Json finding_to_json(const Finding& f) {
  return Json{{"seq", elements_to_json(f.sequence.entries())}, {"certificate", certificate_to_json(f.coloring)}};
}

inline Json to_json(const SearchRun& run) {
  Json counter = Json::array();
  for (const auto& f : run.counterexamples) counter.push_back(finding_to_json(f));
  return Json{{"kind", "search-L"},
              {"spec",
               {{"n", run.spec.n},
                {"length", run.spec.length},
                {"max_sum", run.spec.max_sum()},
                {"instance_budget", to_json(run.spec.instance_budget)}}},
              {"cursor", run.cursor ? composition_to_json(*run.cursor) : Json(nullptr)},
              {"counterexamples", counter},
              {"undecided", run.undecided},
              {"counts",
               {{"enumerated", run.counts.enumerated},
                {"tested", run.counts.tested},
                {"pruned_by_reversal", run.counts.pruned_by_reversal},
                {"unsat", run.counts.unsat},
                {"budget_exceeded", run.counts.budget_exceeded},
                {"solver_nodes", run.counts.solver_nodes}}},
              {"status", to_string(run.status)}};
}

inline RunStatus run_status_from_string(const std::string& s) {
  for (auto st : {RunStatus::running, RunStatus::holds, RunStatus::fails, RunStatus::inconclusive, RunStatus::budget_exceeded})
    if (s == to_string(st)) return st;
  throw ParseError("unknown run status '" + s + "'", "$.status");
}

inline SearchRun search_run_from_json(const Json& j) {
  try {
    if (j.value("kind", "") != "search-L") throw ParseError("not a search-L run document", "$.kind");
    SearchRun run;
    const Json& spec = j.at("spec");
    run.spec.n = spec.at("n").get<int>();
    run.spec.length = spec.at("length").get<std::size_t>();
    if (spec.contains("instance_budget")) run.spec.instance_budget = budget_from_json(spec["instance_budget"]);
    run.spec.validate();
    if (!j.at("cursor").is_null()) run.cursor = j["cursor"].get<Composition>();
    if (run.cursor && run.cursor->size() != run.spec.length) throw ParseError("cursor length does not match spec", "$.cursor");
    for (const auto& f : j.at("counterexamples")) {
      Sequence seq(parse_elements(f.at("seq"), "$.counterexamples[].seq"), 1);
      run.counterexamples.push_back({seq, certificate_from_json(f.at("certificate"), block_sums(seq))});
    }
    run.undecided = j.value("undecided", std::vector<Composition>{});
    const Json& c = j.at("counts");
    run.counts = {c.at("enumerated").get<std::uint64_t>(), c.at("tested").get<std::uint64_t>(),
                  c.at("pruned_by_reversal").get<std::uint64_t>(), c.at("unsat").get<std::uint64_t>(),
                  c.at("budget_exceeded").get<std::uint64_t>(), c.value("solver_nodes", std::uint64_t{0})};
    run.status = run_status_from_string(j.at("status").get<std::string>());
    return run;
  } catch (const Json::exception& e) {
    throw ParseError(e.what(), "search run");
  }
}

inline std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Json to_json(const HuntFinding& f) {
  return Json{{"seq", elements_to_json(f.sequence.entries())},
              {"block_sums", f.block_sum_count},
              {"mean", rational_string(f.mean)},
              {"critical", f.critical},
              {"worker", f.worker},
              {"evaluation", f.evaluation},
              {"certificate", certificate_to_json(f.coloring)}};
}

}  // namespace schur

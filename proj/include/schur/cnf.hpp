#pragma once

// DIMACS export of the n-cover problem and import of a solver's model.
//
// Variable v(e, c) = (rank(e) - 1) * n + c, where rank is the 1-based
// position of e in canonical order and c runs over 1..n.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schur/solver.hpp"

namespace schur {

struct CnfOptions {
  /// Pairwise "at most one color" clauses. Off by default: a cover is enough.
  bool at_most_one = false;
  /// Element of rank r may only use colors 1..r (sound for canonical first-use numbering).
  bool symmetry = true;
};

struct CnfDocument {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
  std::size_t cover_clauses = 0, at_most_one_clauses = 0, triple_clauses = 0, symmetry_clauses = 0;
  std::vector<std::string> comments;

  std::string to_dimacs() const {
    std::ostringstream os;
    for (const auto& c : comments) os << "c " << c << '\n';
    os << "p cnf " << variables << ' ' << clauses.size() << '\n';
    for (const auto& cl : clauses) {
      for (int lit : cl) os << lit << ' ';
      os << "0\n";
    }
    return os.str();
  }
};

inline int cnf_variable(std::size_t rank0, int color1, int n) { return static_cast<int>(rank0) * n + color1; }

inline CnfDocument export_cnf(const ElementSet& x, int n, const CnfOptions& opts = {}) {
  detail::check_color_count(n);
  if (x.contains_zero()) throw DomainError("export_cnf: 0 is in the set, the cover problem is trivially infeasible");
  auto h = schur_triples(x);
  CnfDocument doc;
  doc.variables = static_cast<int>(x.size()) * n;
  doc.comments.push_back("sumfree " + std::to_string(n) + "-cover of " + std::to_string(x.size()) + " elements, " +
                         std::to_string(h.edge_count()) + " Schur triples");
  doc.comments.push_back("v(e,c) = (rank(e)-1)*" + std::to_string(n) + " + c");
  for (std::size_t r = 0; r < x.size(); ++r) doc.comments.push_back("rank " + std::to_string(r + 1) + " = " + x[r].to_string());

  for (std::size_t r = 0; r < x.size(); ++r) {
    std::vector<int> cl;
    for (int c = 1; c <= n; ++c) cl.push_back(cnf_variable(r, c, n));
    doc.clauses.push_back(std::move(cl));
    ++doc.cover_clauses;
  }
  if (opts.at_most_one) {
    for (std::size_t r = 0; r < x.size(); ++r)
      for (int c = 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          doc.clauses.push_back({-cnf_variable(r, c, n), -cnf_variable(r, d, n)});
          ++doc.at_most_one_clauses;
        }
  }
  for (const auto& e : h.edges()) {
    for (int c = 1; c <= n; ++c) {
      std::vector<int> cl;
      for (std::uint8_t t = 0; t < e.arity; ++t) cl.push_back(-cnf_variable(e.members[t], c, n));
      doc.clauses.push_back(std::move(cl));
      ++doc.triple_clauses;
    }
  }
  if (opts.symmetry) {
    for (std::size_t r = 0; r < x.size() && static_cast<int>(r) + 1 < n; ++r)
      for (int c = static_cast<int>(r) + 2; c <= n; ++c) {
        doc.clauses.push_back({-cnf_variable(r, c, n)});
        ++doc.symmetry_clauses;
      }
  }
  return doc;
}

/// Literals from solver output: "v" lines, bare integers, or a "s ..." status
/// line. "c" comment lines are skipped. Throws VerificationError on UNSAT.
inline std::vector<int> parse_model(std::string_view text) {
  std::vector<int> lits;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      std::string status;
      ls >> status;
      if (status != "SATISFIABLE") throw VerificationError("solver reported " + status);
      continue;
    }
    if (tok != "v") ls.seekg(0);
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        if (lit != 0) lits.push_back(lit);
      } catch (const std::logic_error&) {
        throw ParseError("bad literal '" + tok + "'", "model line " + std::to_string(lineno));
      }
    }
  }
  return lits;
}

/// Turns a satisfying assignment into a Coloring (least true color per
/// element) and checks it with verify_coloring.
inline Coloring import_model(const ElementSet& x, int n, const std::vector<int>& literals) {
  detail::check_color_count(n);
  const int vars = static_cast<int>(x.size()) * n;
  std::vector<signed char> value(static_cast<std::size_t>(vars) + 1, 0);
  for (int lit : literals) {
    int v = lit < 0 ? -lit : lit;
    if (v > vars) throw VerificationError("model mentions variable " + std::to_string(v) + " beyond " + std::to_string(vars));
    value[static_cast<std::size_t>(v)] = lit > 0 ? 1 : -1;
  }
  std::vector<int> colors(x.size(), 0);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (int c = 1; c <= n && colors[r] == 0; ++c)
      if (value[static_cast<std::size_t>(cnf_variable(r, c, n))] > 0) colors[r] = c;
    if (colors[r] == 0) throw VerificationError("model gives no color to " + x[r].to_string());
  }
  Coloring col(x, std::move(colors), n);
  auto check = verify_coloring(x, col);
  if (!check.valid) {
    const auto& t = *check.violation;
    throw VerificationError("model is not a sumfree cover: " + t.x.to_string() + " + " + t.y.to_string() + " = " +
                            t.z.to_string() + " in color " + std::to_string(check.color));
  }
  return col;
}

inline Coloring import_model(const ElementSet& x, int n, std::string_view solver_output) {
  return import_model(x, n, parse_model(solver_output));
}

}  // namespace schur

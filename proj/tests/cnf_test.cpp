#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schur/cnf.hpp"

using namespace schur;

namespace {

std::string model_text(const std::vector<int>& val) {
  std::string s = "s SATISFIABLE\nv";
  for (std::size_t v = 1; v < val.size(); ++v) s += " " + std::to_string(val[v] > 0 ? int(v) : -int(v));
  return s + " 0\n";
}

}  // namespace

TEST(Cnf, Interval1To4TwoColors) {
  auto doc = export_cnf(ElementSet::interval(1, 4), 2);
  EXPECT_EQ(doc.variables, 8);
  EXPECT_EQ(doc.cover_clauses, 4u);
  EXPECT_EQ(doc.triple_clauses, 8u);
  EXPECT_EQ(doc.symmetry_clauses, 1u);
  EXPECT_EQ(doc.clauses.size(), 13u);
  EXPECT_NE(doc.to_dimacs().find("p cnf 8 13"), std::string::npos);
}

TEST(Cnf, VariableNumbering) {
  EXPECT_EQ(cnf_variable(0, 1, 3), 1);
  EXPECT_EQ(cnf_variable(2, 3, 3), 9);
}

TEST(Cnf, RejectsZero) { EXPECT_THROW(export_cnf(ElementSet::of_integers({0, 1}), 2), DomainError); }

TEST(Cnf, OracleSolverAgreesAndModelsImport) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    std::set<long long> s;
    std::size_t sz = 2 + rng() % 8;
    while (s.size() < sz) s.insert(1 + static_cast<long long>(rng() % 25));
    auto x = ElementSet::of_integers(std::vector<long long>(s.begin(), s.end()));
    int n = 1 + static_cast<int>(rng() % 3);
    for (bool amo : {false, true}) {
      auto doc = export_cnf(x, n, CnfOptions{amo, true});
      auto model = oracle::dpll(doc.variables, doc.clauses);
      auto direct = decide_cover(x, n);
      ASSERT_EQ(model.has_value(), direct.status == SolveStatus::sat) << x.to_string() << " n=" << n;
      if (model) {
        auto c = import_model(x, n, model_text(*model));
        EXPECT_TRUE(verify_coloring(x, c).valid);
      }
    }
  }
}

TEST(Cnf, ParseModelForms) {
  EXPECT_EQ(parse_model("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n"), (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(parse_model("1 -2 3 0"), (std::vector<int>{1, -2, 3}));
  EXPECT_THROW(parse_model("s UNSATISFIABLE\n"), VerificationError);
  EXPECT_THROW(parse_model("v 1 x 0\n"), ParseError);
}

TEST(Cnf, ImportRejectsBadModels) {
  auto x = ElementSet::interval(1, 4);
  // All of 1..4 in color 1.
  EXPECT_THROW(import_model(x, 2, std::vector<int>{1, 3, 5, 7}), VerificationError);
  EXPECT_THROW(import_model(x, 2, std::vector<int>{1, 3, 5}), VerificationError);
  EXPECT_THROW(import_model(x, 2, std::vector<int>{99}), VerificationError);
  auto ok = import_model(x, 2, std::vector<int>{1, 4, 6, 7});
  EXPECT_EQ(ok.colors(), (std::vector<int>{1, 2, 2, 1}));
}

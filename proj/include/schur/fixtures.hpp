#pragma once

// Reproduction fixtures: every published example value, checked live.
// A fixture passes, fails (wrong value), or reports that its budget ran out.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "schur/bounds.hpp"
#include "schur/catalog.hpp"
#include "schur/io.hpp"
#include "schur/ramsey_bridge.hpp"
#include "schur/search.hpp"
#include "schur/solver.hpp"

namespace schur {

enum class FixtureStatus { pass, fail, budget_exceeded };

inline const char* to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::pass: return "pass";
    case FixtureStatus::fail: return "fail";
    case FixtureStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct FixtureResult {
  FixtureStatus status = FixtureStatus::pass;
  std::string detail;
  Json data = Json::object();
  double seconds = 0;
};

struct PaperFixture {
  std::string id;
  /// The claim being reproduced, in words.
  std::string source;
  bool long_profile_only = false;
  std::function<FixtureResult(const Budget&)> run;
};

namespace detail {

class FixtureCheck {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok && result_.status == FixtureStatus::pass) {
      result_.status = FixtureStatus::fail;
      result_.detail = what;
    }
  }
  void budget(const std::string& what) {
    if (result_.status == FixtureStatus::pass) {
      result_.status = FixtureStatus::budget_exceeded;
      result_.detail = what;
    }
  }
  bool ok() const { return result_.status == FixtureStatus::pass; }
  Json& data() { return result_.data; }
  FixtureResult take() { return std::move(result_); }

  /// sd(x) == expected with certificate checks; records the outcome under `key`.
  void degree(const std::string& key, const ElementSet& x, int expected, const Budget& b) {
    auto r = schur_degree(x, SolveOptions{b, 1}, expected + 1);
    Json j{{"size", x.size()}, {"expected", expected}};
    if (r.status == DegreeStatus::budget_exceeded) {
      j["lower_bound"] = r.lower_bound;
      data()[key] = j;
      if (r.lower_bound > expected) {
        expect(false, key + ": sd > " + std::to_string(expected));
      } else {
        budget(key + ": budget exceeded at n = " + std::to_string(r.lower_bound));
      }
      return;
    }
    j["degree"] = r.degree ? Json(*r.degree) : Json("infinite");
    if (r.certificate) {
      j["certificate"] = certificate_to_json(*r.certificate);
      expect(verify_coloring(x, *r.certificate).valid, key + ": solver certificate does not verify");
    }
    data()[key] = j;
    expect(r.degree == expected, key + ": expected sd = " + std::to_string(expected) + ", got " + j["degree"].dump());
  }

private:
  FixtureResult result_;
};

inline PaperFixture fixture(std::string id, std::string source, std::function<void(FixtureCheck&, const Budget&)> body,
                            bool long_only = false) {
  return {std::move(id), std::move(source), long_only, [body = std::move(body)](const Budget& b) {
            FixtureCheck check;
            try {
              body(check, b);
            } catch (const BudgetExceeded& e) {
              check.budget(e.what());
            } catch (const std::exception& e) {
              check.expect(false, std::string("exception: ") + e.what());
            }
            return check.take();
          }};
}

inline Sequence ints(std::initializer_list<long long> v) { return Sequence::of_integers(v); }

}  // namespace detail

inline std::vector<PaperFixture> paper_fixtures() {
  using detail::FixtureCheck;
  using detail::fixture;
  using detail::ints;
  namespace cat = catalog;
  std::vector<PaperFixture> f;

  f.push_back(fixture("block-sums-ones", "A = (1,...,1) of length N has block sums [1,N]", [](FixtureCheck& c, const Budget&) {
    for (long long n = 1; n <= 20; ++n) {
      Sequence a = Sequence::of_integers(std::vector<long long>(static_cast<std::size_t>(n), 1));
      c.expect(block_sums(a) == ElementSet::interval(1, n), "block sums of ones, N = " + std::to_string(n));
    }
  }));
  f.push_back(fixture("block-sums-interval-union", "(1,1,m,1,1) has block sums [1,2] u [m,m+4]", [](FixtureCheck& c, const Budget&) {
    for (long long m = 3; m <= 20; ++m) {
      auto want = ElementSet::of_integers({1, 2}).united(ElementSet::interval(m, m + 4));
      c.expect(block_sums(cat::interval_union_sequence(m)) == want, "m = " + std::to_string(m));
    }
  }));
  f.push_back(fixture("contractions-1234", "(3,3,4), (6,4), (3,7) are contractions of (1,2,3,4)", [](FixtureCheck& c, const Budget&) {
    Sequence a = ints({1, 2, 3, 4});
    c.expect(contract(a, 1, 2) == ints({3, 3, 4}), "contract block (1,2)");
    c.expect(contract(a, 1, 3) == ints({6, 4}), "contract block (1,3)");
    c.expect(contract(contract(a, 3, 4), 1, 2) == ints({3, 7}), "contract (3,4) then (1,2)");
    for (auto b : {ints({3, 3, 4}), ints({6, 4}), ints({3, 7})}) {
      auto w = is_minor_witnessed(b, a);
      c.expect(w.is_minor && w.chain.back() == b, "minor witness for " + b.to_string());
      c.expect(block_sums(b).is_subset_of(block_sums(a)), "block sums of minor " + b.to_string());
    }
  }));
  f.push_back(fixture("x-minus-x", "block sums of the derivative of X are (X - X) n N_+", [](FixtureCheck& c, const Budget&) {
    auto x = ElementSet::of_integers({1, 4, 6});
    c.expect(block_sums(delta(x)) == ElementSet::of_integers({2, 3, 5}), "X = {1,4,6}");
    c.expect(difference_set_positive(x) == ElementSet::of_integers({2, 3, 5}), "(X-X) n N_+ for {1,4,6}");
  }));
  f.push_back(fixture("sumfree-basics", "{1,2} is not sumfree, {1,x,x+3} is, and no set containing 0 is", [](FixtureCheck& c, const Budget&) {
    c.expect(!is_sumfree(ElementSet::of_integers({1, 2})), "{1,2}");
    c.expect(is_sumfree(ElementSet({cat::plain(1), cat::x_plus(0), cat::x_plus(3)}, 2)), "{1,x,x+3}");
    c.expect(!is_sumfree(ElementSet::of_integers({0})), "{0}");
    c.expect(decide_cover(ElementSet::of_integers({0, 1}), 5).status == SolveStatus::infinite, "sd({0,1}) = infinity");
  }));

  for (int n = 1; n <= 4; ++n) {
    const long long s = SchurTable::exact[n - 1];
    f.push_back(fixture("schur-number-" + std::to_string(n),
                        "sd([1,S(n)]) = n and sd([1,S(n)+1]) = n+1 with S(" + std::to_string(n) + ") = " + std::to_string(s),
                        [n, s](FixtureCheck& c, const Budget& b) {
                          c.degree("interval_S", ElementSet::interval(1, s), n, b);
                          c.degree("interval_S_plus_1", ElementSet::interval(1, s + 1), n + 1, b);
                        },
                        n == 4));
  }

  f.push_back(fixture("interval-union-sd", "sd([1,2] u [m,m+4]) = 3 for every m >= 3 (checked for m = 3..20)",
                      [](FixtureCheck& c, const Budget& b) {
                        for (long long m = 3; m <= 20; ++m)
                          c.degree("m" + std::to_string(m), block_sums(cat::interval_union_sequence(m)), 3, b);
                      }));
  f.push_back(fixture("powers-of-2-length-14", "A = (2^i), 0 <= i <= 13, has sd(A^) = 3",
                      [](FixtureCheck& c, const Budget& b) { c.degree("sd", block_sums(cat::powers_of(2, 14)), 3, b); }));
  f.push_back(fixture("powers-of-2-length-15", "A = (2^i), 0 <= i <= 14, has sd(A^) = 4",
                      [](FixtureCheck& c, const Budget& b) { c.degree("sd", block_sums(cat::powers_of(2, 15)), 4, b); }));
  f.push_back(fixture("periodic-xy-14", "(x,y,...,x,y) of length 14: sd(A^ minus {7x+7y}) = 3 with the listed C1, C2, C3",
                      [](FixtureCheck& c, const Budget& b) {
                        auto x = cat::periodic_xy_set();
                        c.expect(x.size() == 20, "20 block sums after removing 7x+7y");
                        auto cert = Coloring::from_classes(x, cat::periodic_xy_classes(), 3);
                        c.expect(cert.is_total(), "C1..C3 cover the set");
                        c.expect(verify_coloring(x, cert).valid, "C1..C3 are sumfree");
                        c.degree("sd", x, 3, b);
                      }));
  f.push_back(fixture("x-interval-3", "sd({1,2} u [x,x+3]) = 2 and its only sumfree 2-coloring is {1,x,x+3}, {2,x+1,x+2}",
                      [](FixtureCheck& c, const Budget& b) {
                        auto x = cat::one_two_x_interval(3);
                        c.degree("sd", x, 2, b);
                        auto covers = enumerate_covers(x, 2, b);
                        c.data()["covers"] = covers.size();
                        c.expect(covers.size() == 1, "exactly one 2-coloring up to color swap");
                        auto paper = Coloring::from_classes(x, cat::one_two_x3_classes(), 2).canonical();
                        c.expect(verify_coloring(x, paper).valid, "listed classes are sumfree");
                        c.expect(!covers.empty() && covers.front() == paper, "the unique coloring is the listed one");
                      }));
  f.push_back(fixture("x-interval-4", "sd({1,2} u [x,x+4]) = 3",
                      [](FixtureCheck& c, const Budget& b) { c.degree("sd", cat::one_two_x_interval(4), 3, b); }));
  f.push_back(fixture("one-to-six-with-x-interval", "sd([1,6] u [x,x+13]) = 3 via the listed C1, C2, C3",
                      [](FixtureCheck& c, const Budget& b) {
                        auto x = cat::interval_with_x_interval(6, 13);
                        auto cert = Coloring::from_classes(x, cat::one_to_six_classes(), 3);
                        c.expect(cert.is_total(), "C1..C3 cover the set");
                        c.expect(verify_coloring(x, cert).valid, "C1..C3 are sumfree");
                        c.degree("sd", x, 3, b);
                      }));
  f.push_back(fixture("one-to-seven-with-x-interval", "adjoining 7: sd([1,7] u [x,x+13]) = 4",
                      [](FixtureCheck& c, const Budget& b) { c.degree("sd", cat::interval_with_x_interval(7, 13), 4, b); }));
  f.push_back(fixture("exotic-sequence", "A = (23,375,23,209,209,60,60,60,23,1,60,261,209,23): |A^| = 83, sd(A^) = 3, mean 114",
                      [](FixtureCheck& c, const Budget& b) {
                        auto a = cat::exotic_sequence();
                        auto x = block_sums(a);
                        c.expect(x.size() == 83, "|A^| = 83, got " + std::to_string(x.size()));
                        c.expect(a.mean() == Rational(114), "mean 114");
                        c.degree("sd", x, 3, b);
                      }));

  f.push_back(fixture("ramsey-length-corollary", "|A| >= 5, 16, 61 force sd(A^) >= 3, 4, 5",
                      [](FixtureCheck& c, const Budget&) {
                        c.expect(lower_bound_from_length(5) == 3, "length 5");
                        c.expect(lower_bound_from_length(16) == 4, "length 16");
                        c.expect(lower_bound_from_length(61) == 5, "length 61");
                        c.expect(lower_bound_from_length(60) == 4, "length 60 claims nothing beyond 4");
                      }));
  f.push_back(fixture("converse-k5", "4 independent generators: a triangle-free K_5 coloring gives a sumfree 2-coloring of the 10 block sums",
                      [](FixtureCheck& c, const Budget&) {
                        auto ec = triangle_free_coloring(5, 2);
                        c.expect(ec.triangle_count() == 10 && ec.is_triangle_free(), "K_5 coloring triangle-free over 10 triangles");
                        auto col = transport_coloring(cat::basis_vectors(4), ec);
                        c.expect(col.ground().size() == 10 && verify_coloring(col.ground(), col).valid, "transported 2-coloring");
                        c.data()["certificate"] = certificate_to_json(col);
                      }));
  f.push_back(fixture("converse-k16", "15 independent generators: the GF(16) coloring of K_16 gives a sumfree 3-coloring of 120 block sums",
                      [](FixtureCheck& c, const Budget&) {
                        auto ec = triangle_free_coloring(16, 3);
                        c.expect(ec.triangle_count() == 560 && ec.is_triangle_free(), "K_16 coloring triangle-free over 560 triangles");
                        auto col = transport_coloring(cat::basis_vectors(15), ec);
                        c.expect(col.ground().size() == 120 && verify_coloring(col.ground(), col).valid, "transported 3-coloring");
                      }));
  f.push_back(fixture("converse-powers-of-3", "(1,3,...,3^14) is not Z-free yet its block sums are 3-colorable the same way",
                      [](FixtureCheck& c, const Budget&) {
                        auto a = cat::powers_of(3, 15);
                        c.expect(is_block_faithful(a), "powers of 3 are block-faithful");
                        auto col = transport_coloring(a, triangle_free_coloring(16, 3));
                        c.expect(verify_coloring(col.ground(), col).valid, "transported 3-coloring");
                      }));
  f.push_back(fixture("converse-fails-ones-14", "A = (1,...,1) of length 14 <= R_3(3)-2 still has sd(A^) = sd([1,14]) = 4",
                      [](FixtureCheck& c, const Budget& b) {
                        Sequence a = Sequence::of_integers(std::vector<long long>(14, 1));
                        c.expect(a.size() <= static_cast<std::size_t>(RamseyTable::exact[2] - 2), "length within the converse range");
                        c.degree("sd", block_sums(a), 4, b);
                      }));

  f.push_back(fixture("L2-exhaustive", "L(2) = 2: the sequences (1,1), (1,2), (1,3), (2,2) all have non-sumfree block sums",
                      [](FixtureCheck& c, const Budget& b) {
                        LSearchOptions o;
                        auto run = verify_L_lower(2, 2, o, b);
                        c.expect(run.status == RunStatus::holds, std::string("status ") + to_string(run.status));
                        c.expect(run.counts.tested == 4, "4 sequences up to reversal");
                        auto one = verify_L_lower(2, 1, o, b);
                        c.expect(one.status == RunStatus::fails && !one.counterexamples.empty() &&
                                     one.counterexamples.front().sequence == ints({1}),
                                 "length 1 fails with (1)");
                        c.data()["run"] = to_json(run);
                      }));
  f.push_back(fixture("L3-exhaustive", "L(3) = 5: all 3003 sequences of length 5 with sum <= 15 have sd >= 3",
                      [](FixtureCheck& c, const Budget& b) {
                        LSearchOptions o;
                        auto run = verify_L_lower(3, 5, o, b);
                        c.expect(run.status == RunStatus::holds, std::string("status ") + to_string(run.status));
                        c.expect(run.counts.enumerated == 3003, "3003 compositions enumerated");
                        auto four = verify_L_lower(3, 4, o, b);
                        c.expect(four.status == RunStatus::fails && four.counterexamples.front().sequence == ints({1, 1, 1, 1}),
                                 "length 4 fails with (1,1,1,1)");
                        c.data()["run"] = to_json(run);
                      }));
  f.push_back(fixture("L-brackets", "L(2) = 2, L(3) = 5 by the gap rule; 14 <= L(4) <= 16", [](FixtureCheck& c, const Budget&) {
    c.expect(equality_gap_rule(2) == 2, "gap rule n = 2");
    c.expect(equality_gap_rule(3) == 5, "gap rule n = 3");
    c.expect(!equality_gap_rule(4), "no gap rule at n = 4");
    DetermineLOptions o;
    o.max_enumeration = 100'000;
    auto l2 = determine_L(2, o), l3 = determine_L(3, o), l4 = determine_L(4, o);
    c.expect(l2.exact() && l2.lo == 2, "determine_L(2) = 2");
    c.expect(l3.exact() && l3.lo == 5, "determine_L(3) = 5");
    c.expect(l4.lo == 14 && l4.hi == 16, "determine_L(4) within [14,16]");
  }));

  f.push_back(fixture("table-recursion", "S(n) <= n(S(n-1)+1) for 2 <= n <= 5: 4, 15, 56, 225 against 4, 13, 44, 160",
                      [](FixtureCheck& c, const Budget&) {
                        const long long want[] = {4, 15, 56, 225};
                        for (int n = 2; n <= 5; ++n) {
                          auto row = conjecture_recursion(n);
                          c.expect(row.bound.value == want[n - 2], "n = " + std::to_string(n));
                          c.expect(row.verdict == Verdict::holds, "S(n) within the recursion at n = " + std::to_string(n));
                        }
                      }));
  f.push_back(fixture("conjectural-chain", "conjecturally S(6) <= 966 and S(7) <= 6769", [](FixtureCheck& c, const Budget&) {
    auto r6 = conjecture_recursion(6), r7 = conjecture_recursion(7);
    c.expect(r6.bound.value == 966, "n = 6");
    c.expect(r7.bound.value == 6769, "n = 7");
    c.expect(r6.known.lo == Integer(536) && r6.known.hi == Integer(1836), "536 <= S(6) <= 1836");
    c.expect(r7.known.lo == Integer(1680), "S(7) >= 1680");
  }));
  f.push_back(fixture("ramsey-comparisons", "S(5) <= R_5(3)-2 <= 305, S(6) <= 1836, R_7(3) <= 12861, S(4) <= R_4(3)-2 <= 60",
                      [](FixtureCheck& c, const Budget&) {
                        c.expect(ramsey_bounds(5).hi == Integer(307), "R_5(3) <= 307");
                        c.expect(schur_bounds(6).hi == Integer(1836), "S(6) <= 1836");
                        c.expect(ramsey_bounds(7).hi == Integer(12861), "R_7(3) <= 12861");
                        c.expect(*RamseyTable::entry(4).hi - 2 == 60, "R_4(3) - 2 <= 60");
                        for (int n = 1; n <= 5; ++n)
                          for (const auto& chk : check_classical_bounds(n).checks)
                            c.expect(chk.verdict != Verdict::violated, chk.name + " violated at n = " + std::to_string(n));
                      }));
  f.push_back(fixture("hunt-seeded-exotic", "the length-14 exotic sequence is reported as a finding with mean > 4",
                      [](FixtureCheck& c, const Budget& b) {
                        HuntOptions o;
                        o.seeds = {cat::exotic_sequence()};
                        o.budget = Budget::nodes(3);
                        o.seed_budget = b;
                        auto found = hunt_exotic(o);
                        bool hit = false;
                        for (const auto& h : found) {
                          c.expect(!h.critical, "critical finding " + h.sequence.to_string());
                          hit = hit || h.sequence == cat::exotic_sequence();
                        }
                        c.expect(hit, "seeded exotic sequence verified as a finding");
                      }));
  return f;
}

struct VerifyReport {
  Json json;
  int exit_code = 0;
};

/// Runs fixtures whose id contains `filter`. Profile "quick" skips long
/// fixtures; "long" runs everything. Exit code: 0 all pass, 1 some mismatch,
/// 2 budget exceeded without mismatches.
inline VerifyReport verify_paper(const std::string& filter = {}, const std::string& profile = "quick",
                                 std::function<void(const PaperFixture&, const FixtureResult&)> progress = {}) {
  if (profile != "quick" && profile != "long") throw DomainError("profile must be quick or long");
  const Budget budget = profile == "quick" ? Budget::seconds(120) : Budget::seconds(3600);
  VerifyReport rep;
  rep.json = Json{{"profile", profile}, {"filter", filter}, {"fixtures", Json::array()}};
  std::size_t passed = 0, failed = 0, exceeded = 0;
  std::string first_failure;
  for (const auto& fx : paper_fixtures()) {
    if (!filter.empty() && fx.id.find(filter) == std::string::npos) continue;
    if (fx.long_profile_only && profile != "long") continue;
    auto t0 = std::chrono::steady_clock::now();
    FixtureResult r = fx.run(budget);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(fx, r);
    switch (r.status) {
      case FixtureStatus::pass: ++passed; break;
      case FixtureStatus::fail:
        ++failed;
        if (first_failure.empty()) first_failure = fx.id;
        break;
      case FixtureStatus::budget_exceeded: ++exceeded; break;
    }
    rep.json["fixtures"].push_back(Json{{"id", fx.id},
                                        {"source", fx.source},
                                        {"status", to_string(r.status)},
                                        {"detail", r.detail},
                                        {"seconds", r.seconds},
                                        {"data", r.data}});
  }
  rep.json["summary"] = Json{{"passed", passed}, {"failed", failed}, {"budget_exceeded", exceeded}};
  if (!first_failure.empty()) rep.json["first_failure"] = first_failure;
  rep.exit_code = failed ? 1 : exceeded ? 2 : 0;
  return rep;
}

}  // namespace schur

#include <doctest.h>

#include <random>

#include "cyclelift/lifting.hpp"
#include "cyclelift/trials.hpp"
#include "oracle.hpp"

using namespace cyclelift;

namespace {

std::vector<long long> small(const PolyFunc& f) {
  std::vector<long long> out;
  for (const auto& c : f.coeffs()) out.push_back(c.convert_to<long long>());
  return out;
}

Spectrum to_spectrum(const std::map<std::uint64_t, std::uint64_t>& m) {
  Spectrum s;
  for (auto [size, count] : m) s.push_back({size, count});
  return s;
}

const Cycle& cycle_containing(const FunctionalGraph& g, std::uint64_t v) {
  const auto& d = g.decomposition();
  return d.cycles[d.reaches[v]];
}

}  // namespace

TEST_CASE("multiplier") {
  {
    const PrimePowerModulus pp(3, 1);
    const MultiplierData m = multiplier(parse_poly("x^2+1"), Cycle{{2}, 3}, pp);
    CHECK(m.lambda_mod_pn.value == 1);  // f'(2) = 4
    CHECK(m.lambda_bar.value == 1);
    CHECK(m.order == 1);
  }
  {
    const PolyFunc f = parse_poly("3x-x^3");
    const FunctionalGraph g = build_graph(f, make_modulus(5));
    const Cycle& c = cycle_containing(g, 2);
    CHECK(c.vertices == std::vector<std::uint64_t>{2, 3});
    CHECK(multiplier(f, c, PrimePowerModulus(5, 1)).lambda_bar.value == 81 % 5);
  }
  {
    const MultiplierData m = multiplier(parse_poly("x^3+2"), Cycle{{0, 2, 1}, 3}, PrimePowerModulus(3, 1));
    CHECK(m.lambda_bar.value == 0);
    CHECK_FALSE(m.order.has_value());
  }
  {
    const MultiplierData m = multiplier(parse_poly("x^2"), Cycle{{2, 4}, 7}, PrimePowerModulus(7, 1));
    CHECK(m.lambda_bar.value == (4 * 8) % 7);
    CHECK(m.order == oracle::naive_order(4, 7));
  }
  CHECK_THROWS_AS(multiplier(parse_poly("x"), Cycle{{2}, 9}, PrimePowerModulus(3, 1)), DomainError);
}

TEST_CASE("multiplier does not depend on the starting vertex") {
  // Recompute (f^k)'(v_i) by the chain rule along the orbit of each v_i.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyFunc f = random_poly(rng);
    const auto coeffs = small(f);
    const auto dcoeffs = oracle::derivative(coeffs);
    const PrimePowerModulus pp(trial % 2 ? 5 : 3, 3);
    const std::uint64_t m = pp.value();
    for (const Cycle& c : cycles(build_graph(f, pp.modulus()))) {
      const std::uint64_t lambda = multiplier(f, c, pp).lambda_mod_pn.value;
      for (std::uint64_t start : c.vertices) {
        std::uint64_t prod = 1 % m, x = start;
        for (std::size_t i = 0; i < c.size(); ++i) {
          prod = oracle::mulmod(prod, oracle::eval(dcoeffs, x, m), m);
          x = oracle::eval(coeffs, x, m);
        }
        REQUIRE(x == start);
        CHECK(prod == lambda);
      }
    }
  }
}

TEST_CASE("r_value") {
  CHECK(r_value(parse_poly("x^2+1"), Cycle{{2}, 3}, 2, PrimePowerModulus(3, 1)) == 1);
  const PolyFunc f = parse_poly("3x-x^3");
  for (unsigned i = 1; i <= 4; ++i) {
    const PrimePowerModulus pp(5, i);
    const FunctionalGraph g = build_graph(f, pp.modulus());
    CHECK(r_value(f, cycle_containing(g, 2), 2, pp) == 0);
  }
  CHECK(r_value(parse_poly("x^3"), Cycle{{3}, 8}, 3, PrimePowerModulus(2, 3)) == 1);
  CHECK_THROWS_AS(r_value(parse_poly("x^3"), Cycle{{3}, 8}, 5, PrimePowerModulus(2, 3)), DomainError);
}

TEST_CASE("r_value matches the quotient definition over the integers") {
  // f^k(a) computed with exact integers for tiny cases.
  const PolyFunc f = parse_poly("x^2+1");
  const Cycle c{{2, 5, 8}, 9};
  const PrimePowerModulus pp(3, 2);
  // f(2) = 5, f(5) = 26, f(26) = 677; (677 - 2) / 9 = 75, 75 % 3 = 0.
  CHECK(r_value(f, c, 2, pp) == 0);
  CHECK(r_value_at(f, 3, 2, pp) == 0);
}

TEST_CASE("predict_lift on the worked examples") {
  {
    const LiftPrediction pred = predict_lift(parse_poly("x^3+2"), Cycle{{0, 2, 1}, 3}, PrimePowerModulus(3, 1));
    CHECK(pred.case_tag == LiftCase::LambdaZero);
    CHECK(pred.spectrum == Spectrum{{3, 1}});
  }
  {
    const LiftPrediction pred = predict_lift(parse_poly("x^2+1"), Cycle{{2}, 3}, PrimePowerModulus(3, 1));
    CHECK(pred.case_tag == LiftCase::LambdaOneRNonzero);
    CHECK(pred.r_used == 1);
    CHECK(pred.spectrum == Spectrum{{3, 1}});
  }
  {
    const PolyFunc f = parse_poly("x^2");
    const LiftPrediction pred = predict_lift(f, Cycle{{2, 4}, 7}, PrimePowerModulus(7, 1));
    CHECK(pred.case_tag == LiftCase::Generic);
    CHECK(pred.multiplier.order == 3);
    const Spectrum brute = to_spectrum(oracle::spectrum(oracle::lifted_cycles(small(f), {2, 4}, 7, 7)));
    CHECK(brute == Spectrum{{2, 1}, {6, 2}});
    CHECK(pred.spectrum == brute);
  }
  {
    const LiftPrediction pred = predict_lift(parse_poly("x"), Cycle{{4}, 5}, PrimePowerModulus(5, 1));
    CHECK(pred.case_tag == LiftCase::LambdaOneRZero);
    CHECK(pred.spectrum == Spectrum{{1, 5}});
  }
}

TEST_CASE("verify_lift") {
  {
    const LiftReport r = verify_lift(parse_poly("x^3+2"), Cycle{{0, 2, 1}, 3}, PrimePowerModulus(3, 1));
    CHECK(r.match);
    CHECK(r.observed == Spectrum{{3, 1}});
    CHECK(r.tail_vertices == 6);
  }
  {
    const LiftReport r = verify_lift(parse_poly("x^3"), Cycle{{3}, 8}, PrimePowerModulus(2, 3));
    CHECK(r.match);
    CHECK(r.observed == Spectrum{{2, 1}});
  }
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    for (std::uint64_t v = 0; v < p; ++v) {
      const LiftReport r = verify_lift(parse_poly("x"), Cycle{{v}, p}, PrimePowerModulus(p, 1));
      CHECK(r.match);
      CHECK(r.observed == Spectrum{{1, p}});
    }
  }
  Limits tight;
  tight.max_vertices = 8;
  CHECK_THROWS_AS(verify_lift(parse_poly("x^3+2"), Cycle{{0, 2, 1}, 3}, PrimePowerModulus(3, 1), tight),
                  OverflowError);
}

TEST_CASE("predictions agree with an independent brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const PolyFunc f = random_poly(rng);
    const auto coeffs = small(f);
    for (auto [p, n] : {std::pair{2ull, 4u}, std::pair{3ull, 2u}, std::pair{5ull, 2u}, std::pair{7ull, 1u},
                        std::pair{13ull, 1u}}) {
      const PrimePowerModulus pp(p, n);
      for (const Cycle& c : cycles(build_graph(f, pp.modulus()))) {
        const auto brute = oracle::spectrum(oracle::lifted_cycles(coeffs, c.vertices, pp.value(), p));
        REQUIRE(predict_lift(f, c, pp).spectrum == to_spectrum(brute));
      }
    }
  }
}

TEST_CASE("audit_lift lemma checks") {
  SUBCASE("x^2+1 over Z_3: r drops to 0 outside the persistence hypothesis") {
    const LiftAudit a = audit_lift(parse_poly("x^2+1"), Cycle{{2}, 3}, PrimePowerModulus(3, 1));
    CHECK(a.violations.empty());
    CHECK(a.report.match);
    CHECK(a.edge_regime_drop);
    CHECK(a.tallies.r_persistence.checked == 0);
    CHECK(a.tallies.representative_independence.checked == 1);
  }
  SUBCASE("x^3 over Z_8: same phenomenon for p = 2") {
    const LiftAudit a = audit_lift(parse_poly("x^3"), Cycle{{3}, 8}, PrimePowerModulus(2, 3));
    CHECK(a.violations.empty());
    CHECK(a.edge_regime_drop);
  }
  SUBCASE("persistence is asserted for p > 3") {
    // x + 1 on Z_5: one 5-cycle with lambda = 1 and r != 0.
    const LiftAudit a = audit_lift(parse_poly("x+1"), Cycle{{0, 1, 2, 3, 4}, 5}, PrimePowerModulus(5, 1));
    CHECK(a.violations.empty());
    CHECK(a.tallies.r_persistence.checked == 1);
    CHECK(a.tallies.r_persistence.violated == 0);
  }
  SUBCASE("generic multiplier") {
    const LiftAudit a = audit_lift(parse_poly("x^2"), Cycle{{2, 4}, 7}, PrimePowerModulus(7, 1));
    CHECK(a.violations.empty());
    CHECK(a.tallies.multiplier_transfer.checked == 3);
    CHECK(a.tallies.representative_independence.checked == 0);
  }
}

TEST_CASE("r is independent of the representative when lambda_bar = 1 (direct iteration)") {
  std::mt19937_64 rng(57);
  std::size_t checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const PolyFunc f = random_poly(rng);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
      const PrimePowerModulus pp(p, 2);
      for (const Cycle& c : cycles(build_graph(f, pp.modulus()))) {
        if (multiplier(f, c, pp).lambda_bar.value != 1) continue;
        ++checked;
        std::set<bool> zero_pattern;
        for (std::uint64_t v : c.vertices) {
          const std::uint64_t r = r_value(f, c, v, pp);
          zero_pattern.insert(r == 0);
          for (std::uint64_t shift = 1; shift < p; ++shift)
            CHECK(r_value_at(f, c.size(), v + shift * pp.value(), pp) == r);
        }
        CHECK(zero_pattern.size() == 1);
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("small randomized oracle run is clean") {
  LiftTrialConfig config;
  config.trials = 40;
  config.seed = 99;
  config.limits.max_vertices = 1u << 14;
  const LiftTrialSummary s = run_lift_trials(config);
  CHECK(s.trials == 40);
  CHECK(s.all_match());
  CHECK(s.tallies.violations() == 0);
  CHECK(s.cycles_checked > 0);
  for (const auto& v : s.violations) MESSAGE(v);
}

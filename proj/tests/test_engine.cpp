#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvlab/models.hpp"
#include "mvlab/report_io.hpp"

using namespace mvlab;

TEST_CASE("axiom names round-trip") {
  for (AxiomId id : kAllAxioms) CHECK(axiom_from_name(axiom_name(id)) == id);
  CHECK_FALSE(axiom_from_name("NoSuchAxiom").has_value());
}

TEST_CASE("unary axioms count one case per element") {
  const auto verdict = check_axiom(make_lukasiewicz(), AxiomId::one_absorbing,
                                   SamplingStrategy::grid(10));
  CHECK(verdict.holds);
  CHECK(verdict.cases == 11);
  CHECK(verdict.violations == 0);
  CHECK(verdict.counterexamples.empty());
}

TEST_CASE("ternary axioms count cubed cases") {
  const auto verdict =
      check_axiom(make_lukasiewicz(), AxiomId::lukasiewicz4, SamplingStrategy::grid(20));
  CHECK(verdict.holds);
  CHECK(verdict.cases == 9261);  // 21^3
  const auto assoc =
      check_axiom(make_lukasiewicz(), AxiomId::oplus_associative, SamplingStrategy::grid(20));
  CHECK(assoc.holds);
  CHECK(assoc.cases == 9261);
}

TEST_CASE("full lukasiewicz suite holds on the grid") {
  const CheckReport report = run_suite(make_lukasiewicz(), SamplingStrategy::grid(20));
  REQUIRE(report.verdicts.size() == 8);
  CHECK(report.all_hold());
}

TEST_CASE("derived odot is the De Morgan dual") {
  const AlgebraHandle alg = make_lukasiewicz();
  CHECK(std::get<Rational>(derived_odot(alg, Rational(3, 5), Rational(3, 5))) == Rational(1, 5));
  CHECK(std::get<Rational>(derived_odot(alg, Rational(1), Rational(4, 7))) == Rational(4, 7));
  CHECK(std::get<Rational>(derived_odot(alg, Rational(3, 10), Rational(2, 5))) == Rational(0));
}

TEST_CASE("exhaustive strategy rejects parameterized carriers and vice versa") {
  CHECK_THROWS_AS(run_suite(make_lukasiewicz(), SamplingStrategy::exhaustive()),
                  IncompatibleStrategy);
  CHECK_THROWS_AS(run_suite(make_chang(ChangVariant::standard, 4), SamplingStrategy::grid(5)),
                  IncompatibleStrategy);
  CHECK_THROWS_AS(
      run_suite(make_chang(ChangVariant::standard, 4), SamplingStrategy::random(1, 10, 10)),
      IncompatibleStrategy);
}

TEST_CASE("random strategy is reproducible and seed-sensitive") {
  const SamplingStrategy a = SamplingStrategy::random(42, 200, 97);
  const SamplingStrategy b = SamplingStrategy::random(43, 200, 97);
  const AlgebraHandle alg = make_lukasiewicz();
  const std::string ra = report_to_json(run_suite(alg, a), alg.render);
  const std::string ra2 = report_to_json(run_suite(alg, a), alg.render);
  const std::string rb = report_to_json(run_suite(alg, b), alg.render);
  CHECK(ra == ra2);
  CHECK(ra != rb);
  const auto verdict = check_axiom(alg, AxiomId::lukasiewicz4, a);
  CHECK(verdict.cases == 200);
  CHECK(verdict.holds);
}

TEST_CASE("reports are byte-identical across runs") {
  const AlgebraHandle alg = make_interval_i0();
  const std::string first = report_to_json(run_suite(alg, SamplingStrategy::grid(12)), alg.render);
  const std::string second = report_to_json(run_suite(alg, SamplingStrategy::grid(12)), alg.render);
  CHECK(first == second);
  CHECK(first.find("\"algebra\"") != std::string::npos);
  CHECK(first.find("\"strategy\"") != std::string::npos);
  CHECK(first.find("\"verdicts\"") != std::string::npos);
}

TEST_CASE("stored counterexamples re-evaluate to their recorded sides") {
  // The star algebra with zero = 0^0 fails the identity law; every stored
  // counterexample must reproduce when replayed through the operations.
  const AlgebraHandle alg = make_star(StarZero::lower0);
  const auto verdict = check_axiom(alg, AxiomId::zero_identity, SamplingStrategy::grid(10));
  CHECK_FALSE(verdict.holds);
  REQUIRE_FALSE(verdict.counterexamples.empty());
  for (const auto& ce : verdict.counterexamples) {
    REQUIRE(ce.inputs.size() == 2);
    CHECK(ce.inputs[0] == alg.zero);
    const Element replay = alg.oplus(ce.inputs[0], ce.inputs[1]);
    CHECK(replay == ce.lhs);
    CHECK_FALSE(alg.equal(ce.lhs, ce.rhs));
  }
}

TEST_CASE("counterexamples are sorted and capped with full violation counts") {
  CheckOptions capped;
  capped.max_counterexamples = 3;
  const auto verdict = check_axiom(make_star(StarZero::upper0), AxiomId::zero_identity,
                                   SamplingStrategy::grid(10), capped);
  CHECK_FALSE(verdict.holds);
  CHECK(verdict.counterexamples.size() == 3);
  CHECK(verdict.violations > 3);
  for (std::size_t i = 1; i < verdict.counterexamples.size(); ++i) {
    const auto& prev = verdict.counterexamples[i - 1].inputs;
    const auto& cur = verdict.counterexamples[i].inputs;
    CHECK(!element_less(cur[1], prev[1]));
  }
}

TEST_CASE("the as-printed axiom-4 form fails on the lukasiewicz carrier") {
  CheckOptions printed;
  printed.axiom4_form = Axiom4Form::as_printed;
  const auto verdict =
      check_axiom(make_lukasiewicz(), AxiomId::lukasiewicz4, SamplingStrategy::grid(10), printed);
  CHECK_FALSE(verdict.holds);  // e.g. x=1/5, y=3/10: lhs 3/10, rhs 1/5
  const auto standard =
      check_axiom(make_lukasiewicz(), AxiomId::lukasiewicz4, SamplingStrategy::grid(10));
  CHECK(standard.holds);
}

TEST_CASE("interval-i0 and its odot dual pass the suite; interval-i1 reports honestly") {
  CHECK(run_suite(make_interval_i0(), SamplingStrategy::grid(20)).all_hold());
  CHECK(run_suite(make_interval_i0_odot(), SamplingStrategy::grid(20)).all_hold());
  CHECK(run_suite(make_rectangle(), SamplingStrategy::grid(20)).all_hold());
  // The literal upper-family formula has no identity at 0^1.
  const CheckReport i1 = run_suite(make_interval_i1(), SamplingStrategy::grid(10));
  for (const auto& v : i1.verdicts)
    if (v.axiom == AxiomId::zero_identity) CHECK_FALSE(v.holds);
}

TEST_CASE("truncated carrier is an MV-algebra for any mass") {
  CHECK(run_suite(make_truncated(Rational(3, 4)), SamplingStrategy::grid(15)).all_hold());
  CHECK(run_suite(make_truncated(Rational(1)), SamplingStrategy::grid(15)).all_hold());
}

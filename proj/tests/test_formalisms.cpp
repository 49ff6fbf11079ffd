#include "lpsucc/errors.hpp"
#include "lpsucc/formalisms.hpp"
#include "lpsucc/random.hpp"
#include "lpsucc/stable.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lpsucc;

namespace {
using Strings = std::vector<std::string>;

CardinalityConstraint all3(std::size_t lo, std::size_t hi) {
    return CardinalityConstraint(lo, hi, {RuleElement::pos(1), RuleElement::pos(2), RuleElement::pos(3)});
}

Formula lit(Var x, bool positive) { return positive ? Formula::var(x) : negate(Formula::var(x)); }
} // namespace

TEST_CASE("cardinality constraint satisfaction") {
    auto x1 = Interpretation::from_string("100");
    CHECK(cc_satisfies(x1, all3(1, 1)));
    CHECK_FALSE(cc_satisfies(x1, all3(2, 3)));
    CHECK(cc_satisfies(Interpretation::from_string("011"), all3(2, 3)));
    CHECK_THROWS_AS(all3(2, 1), PreconditionError);
    CHECK_THROWS_AS(all3(0, 4), PreconditionError);
    CHECK_THROWS_AS(CardinalityConstraint(0, 1, {RuleElement::negneg(1)}), PreconditionError);
}

TEST_CASE("CC programs") {
    auto p13 = parse_cc("{x1; x2; x3}.\n#false :- 0 {x1; x2; x3} 0.\n#false :- 2 {x1; x2; x3} 2.\n");
    CHECK(p13.size() == 3);
    CHECK(p13.constraint_count() == 2);
    CHECK(cc_answer_sets(p13).strings() == Strings{"001", "010", "100", "111"});
    CHECK(cc_answer_sets(parse_cc("{x1}.")).strings() == Strings{"0", "1"});
    CHECK(parse_cc(render_cc(p13)).rules == p13.rules);
    // Upper bounds are judged against the candidate, lower bounds net of
    // satisfied `not` elements against derived atoms.
    auto chain = parse_cc("#vars 3.\n{x1}.\nx2 :- 1 {x1; not x3} 1.");
    CHECK(cc_answer_sets(chain).strings() == Strings{"010", "100"});
    CHECK_THROWS_AS(parse_cc("#false :- 3 {x1; x2} 3."), ParseError);
    CHECK_THROWS_AS(parse_cc("x1 :- not not x2."), ParseError);
}

TEST_CASE("CC positive loops through constraints are unfounded") {
    auto p = parse_cc("x1 :- 1 {x2} 1.\nx2 :- 1 {x1} 1.");
    CHECK(cc_answer_sets(p).strings() == Strings{"00"});
}

TEST_CASE("DT theories") {
    auto d14 = parse_dt("x1 <= x1.\n-x1 <= -x1.\n");
    CHECK(d14.is_simple());
    CHECK(d14.size() == 2);
    CHECK(dt_models(d14).strings() == Strings{"0", "1"});
    CHECK(dt_models(CausalTheory{1, {}}).strings().empty());

    auto d15 = parse_dt("x1 <= x1.\n-x1 <= -x1.\nx2 <= x2.\n-x2 <= -x2.\n#false <= !((x1 & -x2) | (-x1 & x2)).\n");
    CHECK_FALSE(d15.is_simple());
    CHECK(dt_models(d15).strings() == Strings{"01", "10"});
    CHECK(render_dt(parse_dt(render_dt(d15))) == render_dt(d15));

    auto J = dt_reduct(d14, Interpretation::from_string("1"));
    CHECK(J.contains({1, true}));
    CHECK_FALSE(J.contains({1, false}));
    CHECK(J.consistent());
    CHECK(J.complete());
}

TEST_CASE("TV programs") {
    auto p16 = parse_tv("x1 :- : x1.\n-x1 :- : -x1.\n");
    CHECK(tv_models(p16).strings() == Strings{"0", "1"});
    CHECK(tv_models(pf_to_tv(Formula::var(1), 1)).strings() == Strings{"1"});
    auto clash = parse_tv("x1 :- : #true.\n-x1 :- : #true.\n");
    CHECK(tv_models(clash).strings().empty());
    auto chained = parse_tv("x1 :- : #true.\nx2 :- x1 : #true.\n-x3 :- x2, x1 : x1.\n");
    CHECK(tv_models(chained).strings() == Strings{"110"});
    CHECK(render_tv(parse_tv(render_tv(chained))) == render_tv(chained));
    CHECK_THROWS_AS(parse_tv("x1 :- x2."), ParseError);
}

TEST_CASE("translations into TV") {
    auto d14 = parse_dt("x1 <= x1.\n-x1 <= -x1.\n");
    auto p16 = parse_tv("x1 :- : x1.\n-x1 :- : -x1.\n");
    CHECK(render_tv(dt_to_tv(d14)) == render_tv(p16));

    auto p3 = parse_program("x1 :- not not x1.");
    auto t3 = cp_to_tv(p3);
    CHECK(t3.size() == p3.size() + 1);
    CHECK(tv_models(t3).strings() == Strings{"0", "1"});

    auto parity2 = disjoin(conjoin(lit(1, true), lit(2, false)), conjoin(lit(1, false), lit(2, true)));
    auto t = pf_to_tv(parity2, 2);
    CHECK(t.size() == 2 * 2 + 2);
    CHECK(tv_models(t).strings() == Strings{"01", "10"});

    auto mixed = parse_program("#vars 3.\nx1 :- x2, not x3, not not x1, #true.\n#false :- #false.");
    auto tm = cp_to_tv(mixed);
    CHECK(render_tv(tm) ==
          "#vars 3.\nx1 :- x2 : !x3 & x1.\n#false :- : #false.\n-x1 :- : !x1.\n-x2 :- : !x2.\n-x3 :- : !x3.\n");
}

TEST_CASE("property: CC semantics agrees with the generate-and-test oracle") {
    Rng rng(13);
    for (int i = 0; i < 400; ++i) {
        std::size_t n = uniform(rng, 1, 4);
        CCProgram p{n, {}};
        auto elem = [&] {
            Var x = static_cast<Var>(uniform(rng, 1, n));
            return uniform(rng, 0, 1) ? RuleElement::pos(x) : RuleElement::neg(x);
        };
        CCRule choice;
        choice.kind = CCRule::HeadKind::Choice;
        for (Var x = 1; x <= n; ++x)
            if (uniform(rng, 0, 2)) choice.choice.push_back(x);
        p.rules.push_back(choice);
        for (std::size_t r = uniform(rng, 0, 4); r > 0; --r) {
            CCRule rule;
            bool bottom = uniform(rng, 0, 1);
            rule.kind = bottom ? CCRule::HeadKind::Bottom : CCRule::HeadKind::Atom;
            rule.atom = bottom ? 0 : static_cast<Var>(uniform(rng, 1, n));
            for (std::size_t k = uniform(rng, 0, 2); k > 0; --k) rule.literals.push_back(elem());
            std::sort(rule.literals.begin(), rule.literals.end());
            rule.literals.erase(std::unique(rule.literals.begin(), rule.literals.end()), rule.literals.end());
            if (bottom) {
                std::vector<RuleElement> es;
                for (std::size_t k = uniform(rng, 1, 4); k > 0; --k) es.push_back(elem());
                CardinalityConstraint probe(0, 0, es);
                std::size_t hi = uniform(rng, 0, probe.elements.size());
                rule.constraints.emplace_back(uniform(rng, 0, hi), hi, es);
            }
            p.rules.push_back(rule);
        }
        INFO(render_cc(p));
        REQUIRE(oracle::as_set(cc_answer_sets(p)) == oracle::cc_answer_sets(p));
        for (std::uint64_t I = 0; I < (std::uint64_t{1} << n); ++I)
            for (const auto& r : p.rules)
                for (const auto& c : r.constraints) {
                    std::size_t k = 0;
                    for (const auto& e : c.elements) k += oracle::sat(I, e);
                    CHECK(cc_satisfies(Interpretation::from_mask(n, I), c) == (c.lower <= k && k <= c.upper));
                }
    }
}

TEST_CASE("property: DT and TV semantics agree with the unique-model oracle") {
    Rng rng(21);
    for (int i = 0; i < 400; ++i) {
        auto d = random_theory(rng, {4, 8, i % 2 == 1});
        INFO(render_dt(d));
        REQUIRE(oracle::as_set(dt_models(d)) == oracle::dt_models(d));
        auto t = dt_to_tv(d);
        REQUIRE(oracle::as_set(tv_models(t)) == oracle::tv_models(t));
    }
}

TEST_CASE("property: translations preserve models") {
    Rng rng(55);
    for (int i = 0; i < 500; ++i) {
        auto d = random_theory(rng, {4, 8, false});
        CHECK(dt_to_tv(d).size() == d.rules.size());
        REQUIRE(tv_models(dt_to_tv(d)) == dt_models(d));

        auto p = random_program(rng, {4, 8, 4, false});
        auto t = cp_to_tv(p);
        CHECK(t.size() == p.size() + p.signature_size());
        REQUIRE(tv_models(t) == answer_sets(p));
        CHECK(oracle::as_set(tv_models(t)) == oracle::answer_sets(p));
    }
    for (int i = 0; i < 200; ++i) {
        std::size_t n = uniform(rng, 1, 4);
        auto phi = random_formula(rng, n, 4);
        auto t = pf_to_tv(phi, n);
        CHECK(t.size() == 2 * n + 2);
        REQUIRE(tv_models(t) == make_report(n, models(phi, n)));
    }
}

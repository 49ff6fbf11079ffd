#include "lpsucc/completion.hpp"
#include "lpsucc/errors.hpp"
#include "lpsucc/generators.hpp"
#include "lpsucc/simplifier.hpp"
#include "lpsucc/stable.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace lpsucc;

namespace {
using Strings = std::vector<std::string>;
}

TEST_CASE("CP generator reproduces the small patterns") {
    CHECK(render_program(gen_parity_cp(1)) == "#vars 1.\nx1.\n");
    auto three = gen_parity_cp(3);
    CHECK(same_rule_set(three, parse_program("x1 :- not not x1.\nx2 :- not not x2.\nx3 :- not x1, not x2.\nx3 :- x1, x2.")));
    auto four = gen_parity_cp(4);
    CHECK(four.size() == 7);
    CHECK(same_rule_set(four, parse_program("x1 :- not not x1.\nx2 :- not not x2.\nx3 :- not not x3.\n"
                                            "x4 :- x1, x2, not x3.\nx4 :- x1, x3, not x2.\n"
                                            "x4 :- x2, x3, not x1.\nx4 :- not x1, not x2, not x3.")));
    // Even w in lexicographic order: 000, 011, 101, 110.
    CHECK(render_rule(four.rules()[3]) == "x4 :- not x1, not x2, not x3.");
    CHECK(render_rule(four.rules()[4]) == "x4 :- x2, x3, not x1.");
    CHECK(render_rule(four.rules()[6]) == "x4 :- x1, x2, not x3.");
    CHECK(answer_sets(gen_parity_cp(1)).strings() == Strings{"1"});
    CHECK_THROWS_AS(gen_parity_cp(0), PreconditionError);
}

TEST_CASE("CP size formula up to n = 20") {
    for (std::size_t n = 2; n <= 20; ++n) CHECK(gen_parity_cp(n).size() == (n - 1) + (std::size_t{1} << (n - 2)));
    CHECK(predicted_cp_size(10) == 265);
}

TEST_CASE("generated CP programs are standard and pass the coverage checks") {
    for (std::size_t n = 1; n <= 10; ++n) {
        auto p = gen_parity_cp(n);
        CHECK(is_standard(p));
        CHECK(coverage_partition(p).violations.empty());
    }
}

TEST_CASE("LP generator") {
    CHECK(answer_sets(gen_parity_lp(2)).strings() == Strings{"01", "10"});
    CHECK(answer_sets(gen_parity_lp(1)).strings() == Strings{"1"});
    CHECK(gen_parity_lp(2).is_normal());
    CHECK_THROWS_AS(gen_parity_lp(3), PreconditionError);
    CHECK_THROWS_AS(gen_parity_lp(7), PreconditionError);
}

TEST_CASE("CC generator") {
    auto p = gen_parity_cc(3);
    CHECK(p.rules == parse_cc("{x1; x2; x3}.\n#false :- 0 {x1; x2; x3} 0.\n#false :- 2 {x1; x2; x3} 2.\n").rules);
    CHECK(p.constraint_count() == 2);
    CHECK(cc_answer_sets(p).strings() == Strings{"001", "010", "100", "111"});
}

TEST_CASE("PF, DT and TV generators") {
    CHECK(render_formula(gen_parity_pf(2)) == "x1 & !x2 | !x1 & x2");
    CHECK(make_report(2, models(gen_parity_pf(2), 2)).strings() == Strings{"01", "10"});
    CHECK(gen_parity_pf(1) == Formula::var(1));
    auto d = gen_parity_dt(2);
    CHECK(d.rules.size() == 5);
    CHECK(dt_models(d).strings() == Strings{"01", "10"});
    CHECK(gen_parity_tv(3).size() == 8);
}

TEST_CASE("every formalism encodes PARITY for small n") {
    for (auto f : {FormalismTag::CP, FormalismTag::CC, FormalismTag::DT, FormalismTag::TV, FormalismTag::PF}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            auto g = generate_parity(f, n);
            INFO(formalism_name(f), " n=", n);
            CHECK(oracle::as_set(g.solve()) == oracle::parity(n));
            CHECK(g.reported_size == g.predicted_size);
        }
    }
}

TEST_CASE("rendered instances parse back to the same models") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(answer_sets(parse_program(generate_parity(FormalismTag::CP, n).render())) == answer_sets(gen_parity_cp(n)));
        CHECK(cc_answer_sets(parse_cc(generate_parity(FormalismTag::CC, n).render())).strings().size() == (1u << (n - 1)));
        CHECK(dt_models(parse_dt(generate_parity(FormalismTag::DT, n).render())) == dt_models(gen_parity_dt(n)));
        CHECK(tv_models(parse_tv(generate_parity(FormalismTag::TV, n).render())) == tv_models(gen_parity_tv(n)));
        auto fs = parse_formula_set(generate_parity(FormalismTag::PF, n).render());
        CHECK(fs.signature_size == n);
        CHECK(models(fs.formulas, n).size() == (1u << (n - 1)));
    }
}

TEST_CASE("size table") {
    auto t = size_table(10);
    REQUIRE(t.rows.size() == 10);
    CHECK(t.rows[3].cp == 7);
    CHECK(t.rows[2].cc_constraints == 2);
    CHECK(t.rows[2].cc_rules == 3);
    CHECK(t.rows[9].cp == 265);
    for (const auto& r : t.rows) {
        CHECK(r.tv == 2 * r.n + 2);
        CHECK(r.cc_constraints == r.n / 2 + 1);
        CHECK(r.dt == predicted_dt_size(r.n));
        CHECK(r.pf == predicted_pf_size(r.n));
    }
    auto j = to_json(t);
    CHECK(j["rows"].size() == 10);
    CHECK(j["fit"]["pf_per_n2"].get<double>() > 0);
    CHECK(parse_formalism("dt") == FormalismTag::DT);
    CHECK_FALSE(parse_formalism("xx"));
}

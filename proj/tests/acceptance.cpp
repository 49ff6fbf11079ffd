// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "lpsucc/completion.hpp"
#include "lpsucc/errors.hpp"
#include "lpsucc/formalisms.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/generators.hpp"
#include "lpsucc/random.hpp"
#include "lpsucc/simplifier.hpp"
#include "lpsucc/stable.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lpsucc;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

// Standard PARITY programs seen by criteria 2 and 3; criterion 9 audits them.
std::vector<Program> standard_instances;

std::set<std::string> report_set(const AnswerSetReport& r) { return oracle::as_set(r); }

Outcome golden() {
    Outcome o;
    auto choice3 = parse_program("x1 :- not not x1.\nx2 :- not not x2.\nx3 :- not x1, not x2.\nx3 :- x1, x2.\n");
    o.expect(report_set(answer_sets(choice3)) == std::set<std::string>{"111", "100", "010", "001"}, "three-variable program");
    auto choice1 = parse_program("x1 :- not not x1.\n");
    o.expect(report_set(answer_sets(choice1)) == std::set<std::string>{"1", "0"}, "one-variable choice");

    auto loops2 = parse_program("x1 :- not x2.\nx2 :- not x1.\nx1 :- x1.\nx2 :- x2.\n");
    auto x1 = Formula::var(1), x2 = Formula::var(2);
    std::vector<Formula> expected{equiv(x1, disjoin(x1, negate(x2))), equiv(x2, disjoin(x2, negate(x1)))};
    auto comp = completion(loops2);
    o.expect(comp == expected, "completion formulas");
    o.expect(evaluate(conjoin(comp), std::uint64_t{3}), "11 models the completion");
    auto ans_loops = report_set(answer_sets(loops2));
    o.expect(ans_loops == std::set<std::string>{"01", "10"} && !ans_loops.count("11"), "11 is not an answer set");

    auto redundant2 = parse_program("x1 :- not x2.\nx1 :- x2, not not x1.\nx2 :- not x1.\nx2 :- x1, not not x2.\n");
    auto simplified = simplify_parity(redundant2).program;
    o.expect(same_rule_set(simplified, parse_program("x1 :- not x2.\nx2 :- not x1.\n")), "four-rule program simplifies to two rules");
    return o;
}

Outcome generators() {
    Outcome o;
    const FormalismTag tags[] = {FormalismTag::CP, FormalismTag::CC, FormalismTag::DT, FormalismTag::TV, FormalismTag::PF};
    for (std::size_t n = 1; n <= 12; ++n) {
        auto odd = oracle::parity(n);
        for (auto tag : tags) {
            auto inst = generate_parity(tag, n);
            auto got = report_set(inst.solve());
            if (got != odd || got.size() != (std::size_t{1} << (n - 1)))
                o.fail(std::string(formalism_name(tag)) + " n=" + std::to_string(n));
            if (tag == FormalismTag::CP) {
                const auto& p = std::get<Program>(inst.instance);
                if (is_standard(p)) standard_instances.push_back(p);
                else o.fail("cp n=" + std::to_string(n) + " is not standard");
            }
        }
    }
    return o;
}

Outcome pipeline() {
    Outcome o;
    for (std::size_t n = 1; n <= 10; ++n) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        auto in = gen_parity_cp(n);
        auto odd = oracle::parity(n);

        // Each pass alone, checked by the independent oracle.
        Program cur = in;
        using Pass = std::function<PassResult(const Program&)>;
        const std::pair<const char*, Pass> passes[] = {
            {"drop_inconsistent", [](const Program& p) { return drop_inconsistent_rules(p); }},
            {"drop_singleton_loop", [](const Program& p) { return drop_singleton_loop_rules(p); }},
            {"standardize", [](const Program& p) { return standardize(p); }},
            {"to_almost_pure", [](const Program& p) { return to_almost_pure(p); }},
            {"to_pure", [](const Program& p) { return to_pure(p); }},
        };
        for (const auto& [name, pass] : passes) {
            auto next = pass(cur).program;
            if (oracle::answer_sets(next) != oracle::answer_sets(cur)) o.fail(tag + name + " changed Ans");
            cur = next;
            if (std::string(name) != "drop_inconsistent" && std::string(name) != "drop_singleton_loop" && is_standard(cur))
                standard_instances.push_back(cur);
        }

        auto out = simplify_parity(in).program;
        o.expect(out.size() <= in.size(), tag + "output grew");
        o.expect(enumerate_loops(out).empty(), tag + "loops remain");
        o.expect(check_fages(out).holds, tag + "fages fails");
        o.expect(report_set(answer_sets(out)) == odd, tag + "Ans is not the odd strings");
        o.expect(same_rule_set(out, cur), tag + "pipeline differs from the passes run one by one");
    }
    return o;
}

Outcome lin_zhao() {
    Outcome o;
    Rng rng(20240401);
    RandomProgramParams params{5, 12, 4, false};
    for (int i = 0; i < 500; ++i) {
        auto p = random_program(rng, params);
        std::vector<Formula> theory = completion(p);
        theory.push_back(loop_formulas(p));
        auto mods = oracle::models(theory, p.signature_size());
        if (mods != oracle::answer_sets(p) || !check_lin_zhao(p).holds) {
            o.fail("instance " + std::to_string(i) + ":\n" + render_program(p));
            break;
        }
    }
    return o;
}

Outcome singleton_loops() {
    Outcome o;
    Rng rng(20240402);
    RandomProgramParams params{5, 12, 4, false};
    for (int i = 0; i < 1000; ++i) {
        auto p = random_program(rng, params);
        auto q = drop_singleton_loop_rules(p).program;
        if (oracle::answer_sets(p) != oracle::answer_sets(q) || report_set(answer_sets(q)) != oracle::answer_sets(p)) {
            o.fail("instance " + std::to_string(i) + ":\n" + render_program(p));
            break;
        }
    }
    return o;
}

Outcome antichain() {
    Outcome o;
    Rng rng(20240403);
    RandomProgramParams params{5, 12, 4, true};
    for (int i = 0; i < 1000; ++i) {
        auto p = random_program(rng, params);
        if (!is_antichain(answer_sets(p))) {
            o.fail("instance " + std::to_string(i) + ":\n" + render_program(p));
            break;
        }
    }
    for (std::size_t n = 1; n <= 2; ++n)
        o.expect(represents_parity(gen_parity_lp(n), n), "lp n=" + std::to_string(n));
    for (std::size_t n = 3; n <= 12; ++n) {
        bool refused = false;
        try {
            gen_parity_lp(n);
        } catch (const PreconditionError&) {
            refused = true;
        }
        o.expect(refused, "lp generator accepted n=" + std::to_string(n));
    }
    return o;
}

Outcome sizes() {
    Outcome o;
    auto t = size_table(16);
    o.expect(t.rows.size() == 16, "row count");
    for (const auto& r : t.rows) {
        const std::size_t n = r.n;
        const std::string tag = "n=" + std::to_string(n) + ": ";
        if (n >= 2) o.expect(r.cp == (n - 1) + (std::size_t{1} << (n - 2)), tag + "cp size");
        o.expect(r.cc_constraints == n / 2 + 1, tag + "cc constraints");
        o.expect(r.dt <= 3 * n * n, tag + "dt above 3n^2");
        o.expect(r.pf <= 2 * n * n, tag + "pf above 2n^2");
    }
    std::ostringstream fit;
    fit.precision(3);
    fit << "dt/n^2 <= " << t.dt_per_n2 << ", pf/n^2 <= " << t.pf_per_n2;
    if (o.ok) o.note = fit.str();
    return o;
}

Outcome translations() {
    Outcome o;
    Rng rng(20240404);
    RandomProgramParams pp{4, 8, 3, false};
    for (int i = 0; i < 500 && o.ok; ++i) {
        auto p = random_program(rng, pp);
        auto tv = cp_to_tv(p);
        if (oracle::tv_models(tv) != oracle::answer_sets(p) || report_set(tv_models(tv)) != report_set(answer_sets(p)))
            o.fail("cp_to_tv instance " + std::to_string(i) + ":\n" + render_program(p));
    }
    RandomTheoryParams tp{4, 8, false};
    for (int i = 0; i < 500 && o.ok; ++i) {
        auto d = random_theory(rng, tp);
        auto tv = dt_to_tv(d);
        if (oracle::tv_models(tv) != oracle::dt_models(d) || report_set(tv_models(tv)) != report_set(dt_models(d)))
            o.fail("dt_to_tv instance " + std::to_string(i) + ":\n" + render_dt(d));
    }
    for (int i = 0; i < 500 && o.ok; ++i) {
        std::size_t n = uniform(rng, 1, 4);
        auto phi = random_formula(rng, n, 4);
        auto tv = pf_to_tv(phi, n);
        if (oracle::tv_models(tv) != oracle::models({phi}, n) || report_set(tv_models(tv)) != oracle::models({phi}, n))
            o.fail("pf_to_tv instance " + std::to_string(i) + ": " + render_formula(phi));
    }
    return o;
}

Outcome coverage() {
    Outcome o;
    std::size_t rules = 0;
    for (const auto& p : standard_instances) {
        auto part = coverage_partition(p);
        rules += part.f_minus.size() + part.f_plus.size();
        o.expect(part.f_minus.size() + part.f_plus.size() == p.size(), "partition does not cover every rule");
        for (const auto& v : part.violations) o.fail("violation at n=" + std::to_string(p.signature_size()) + ": " + v);
    }
    o.expect(!standard_instances.empty(), "no instances collected");
    if (o.ok)
        o.note = std::to_string(standard_instances.size()) + " programs, " + std::to_string(rules) + " rules, 0 violations";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    Outcome (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "golden examples", 1.0, golden},
        {2, "generator correctness n=1..12", 60.0, generators},
        {3, "simplification pipeline n=1..10", 60.0, pipeline},
        {4, "lin-zhao on 500 random programs", 30.0, lin_zhao},
        {5, "singleton-loop removal on 1000 random programs", 30.0, singleton_loops},
        {6, "antichain on 1000 normal programs; lp refuses n>=3", 30.0, antichain},
        {7, "size growth n=1..16", 5.0, sizes},
        {8, "translation soundness, 500 per translation", 30.0, translations},
        {9, "coverage partition on standard instances", 10.0, coverage},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) o.fail("took longer than " + std::to_string(c.limit_seconds) + " s");
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.note.empty() ? "" : " - ", o.note.c_str());
        failed += !o.ok;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}

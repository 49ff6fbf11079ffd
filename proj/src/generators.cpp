#include "lpsucc/generators.hpp"

#include "lpsucc/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>

namespace lpsucc {

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n == 0) throw PreconditionError(std::string(what) + ": n must be at least 1");
}

Formula xor_tree(Var lo, Var hi) {
    if (lo == hi) return Formula::var(lo);
    Var mid = lo + (hi - lo) / 2; // left half gets the extra variable
    Formula a = xor_tree(lo, mid);
    Formula b = xor_tree(mid + 1, hi);
    return disjoin(conjoin(a, negate(b)), conjoin(negate(a), b));
}

} // namespace

Program gen_parity_cp(std::size_t n) {
    require_positive(n, "gen_parity_cp");
    Program p(n);
    if (n == 1) {
        p.add(Rule{Head{1}, Body{}});
        return p;
    }
    for (Var i = 1; i < n; ++i) p.add(Rule{Head{i}, Body({RuleElement::negneg(i)})});
    const std::size_t m = n - 1;
    // w ranges over {0,1}^m lexicographically: w_1 is the most significant bit.
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
        if (std::popcount(w) % 2 != 0) continue;
        std::vector<RuleElement> body;
        for (Var i = 1; i <= m; ++i) {
            bool one = (w >> (m - i)) & 1;
            body.push_back(one ? RuleElement::pos(i) : RuleElement::neg(i));
        }
        p.add(Rule{Head{static_cast<Var>(n)}, Body(std::move(body))});
    }
    return p;
}

Program gen_parity_lp(std::size_t n) {
    require_positive(n, "gen_parity_lp");
    if (n >= 3)
        throw PreconditionError("gen_parity_lp: PARITY_" + std::to_string(n) +
                                " has no normal program (answer sets would not form an antichain)");
    Program p(n);
    if (n == 1) {
        p.add(Rule{Head{1}, Body{}});
    } else {
        p.add(Rule{Head{1}, Body({RuleElement::neg(2)})});
        p.add(Rule{Head{2}, Body({RuleElement::neg(1)})});
    }
    return p;
}

CCProgram gen_parity_cc(std::size_t n) {
    require_positive(n, "gen_parity_cc");
    CCProgram p{n, {}};
    CCRule choice;
    choice.kind = CCRule::HeadKind::Choice;
    std::vector<RuleElement> all;
    for (Var i = 1; i <= n; ++i) {
        choice.choice.push_back(i);
        all.push_back(RuleElement::pos(i));
    }
    p.rules.push_back(std::move(choice));
    for (std::size_t k = 0; k <= n; k += 2) {
        CCRule r;
        r.kind = CCRule::HeadKind::Bottom;
        r.constraints.emplace_back(k, k, all);
        p.rules.push_back(std::move(r));
    }
    return p;
}

Formula gen_parity_pf(std::size_t n) {
    require_positive(n, "gen_parity_pf");
    return xor_tree(1, static_cast<Var>(n));
}

CausalTheory gen_parity_dt(std::size_t n) {
    CausalTheory d{n, {}};
    Formula phi = gen_parity_pf(n);
    for (Var i = 1; i <= n; ++i) {
        d.rules.push_back({Literal{i, true}, Formula::var(i)});
        d.rules.push_back({Literal{i, false}, negate(Formula::var(i))});
    }
    d.rules.push_back({std::nullopt, negate(phi)});
    return d;
}

TVProgram gen_parity_tv(std::size_t n) { return pf_to_tv(gen_parity_pf(n), n); }

std::size_t predicted_cp_size(std::size_t n) {
    require_positive(n, "predicted_cp_size");
    return n == 1 ? 1 : (n - 1) + (std::size_t{1} << (n - 2));
}

std::size_t predicted_cc_constraints(std::size_t n) { return n / 2 + 1; }

std::size_t predicted_pf_size(std::size_t n) {
    require_positive(n, "predicted_pf_size");
    if (n == 1) return 0;
    std::size_t a = (n + 1) / 2, b = n / 2;
    return 2 * predicted_pf_size(a) + 2 * predicted_pf_size(b) + 5;
}

std::size_t predicted_dt_size(std::size_t n) {
    // n = 1 is a simple theory (every body a literal) and is measured in rules.
    if (n == 1) return 3;
    return 2 * n + predicted_pf_size(n) + 1;
}

std::size_t predicted_tv_size(std::size_t n) { return 2 * n + 2; }

std::string_view formalism_name(FormalismTag f) {
    switch (f) {
        case FormalismTag::CP: return "cp";
        case FormalismTag::LP: return "lp";
        case FormalismTag::CC: return "cc";
        case FormalismTag::DT: return "dt";
        case FormalismTag::TV: return "tv";
        case FormalismTag::PF: return "pf";
    }
    return "?";
}

std::optional<FormalismTag> parse_formalism(std::string_view name) {
    for (auto f : {FormalismTag::CP, FormalismTag::LP, FormalismTag::CC, FormalismTag::DT, FormalismTag::TV,
                   FormalismTag::PF})
        if (formalism_name(f) == name) return f;
    return std::nullopt;
}

std::string GeneratedInstance::render() const {
    return std::visit(
        [this](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Program>) return render_program(x);
            else if constexpr (std::is_same_v<T, CCProgram>) return render_cc(x);
            else if constexpr (std::is_same_v<T, CausalTheory>) return render_dt(x);
            else if constexpr (std::is_same_v<T, TVProgram>) return render_tv(x);
            else return "#vars " + std::to_string(n) + ".\n" + render_formula(x) + ".\n";
        },
        instance);
}

AnswerSetReport GeneratedInstance::solve(const EnumerationCaps& caps) const {
    return std::visit(
        [&](const auto& x) -> AnswerSetReport {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Program>) return answer_sets(x, caps);
            else if constexpr (std::is_same_v<T, CCProgram>) return cc_answer_sets(x, caps);
            else if constexpr (std::is_same_v<T, CausalTheory>) return dt_models(x, caps);
            else if constexpr (std::is_same_v<T, TVProgram>) return tv_models(x, caps);
            else return make_report(n, models(x, n, caps));
        },
        instance);
}

GeneratedInstance generate_parity(FormalismTag f, std::size_t n) {
    GeneratedInstance g;
    g.formalism = f;
    g.n = n;
    switch (f) {
        case FormalismTag::CP: {
            auto p = gen_parity_cp(n);
            g.reported_size = p.size();
            g.predicted_size = predicted_cp_size(n);
            g.instance = std::move(p);
            break;
        }
        case FormalismTag::LP: {
            auto p = gen_parity_lp(n);
            g.reported_size = g.predicted_size = p.size();
            g.instance = std::move(p);
            break;
        }
        case FormalismTag::CC: {
            auto p = gen_parity_cc(n);
            g.reported_size = p.constraint_count();
            g.predicted_size = predicted_cc_constraints(n);
            g.instance = std::move(p);
            break;
        }
        case FormalismTag::DT: {
            auto d = gen_parity_dt(n);
            g.reported_size = d.size();
            g.predicted_size = predicted_dt_size(n);
            g.instance = std::move(d);
            break;
        }
        case FormalismTag::TV: {
            auto p = gen_parity_tv(n);
            g.reported_size = p.size();
            g.predicted_size = predicted_tv_size(n);
            g.instance = std::move(p);
            break;
        }
        case FormalismTag::PF: {
            auto phi = gen_parity_pf(n);
            g.reported_size = formula_metrics(phi).size;
            g.predicted_size = predicted_pf_size(n);
            g.instance = std::move(phi);
            break;
        }
    }
    return g;
}

SizeTable size_table(std::size_t n_max) {
    SizeTable t;
    for (std::size_t n = 1; n <= n_max; ++n) {
        SizeRow row;
        row.n = n;
        row.cp = gen_parity_cp(n).size();
        row.cp_predicted = predicted_cp_size(n);
        auto cc = gen_parity_cc(n);
        row.cc_constraints = cc.constraint_count();
        row.cc_rules = cc.size();
        row.dt = gen_parity_dt(n).size();
        row.pf = formula_metrics(gen_parity_pf(n)).size;
        row.tv = gen_parity_tv(n).size();
        const double n2 = static_cast<double>(n * n);
        t.dt_per_n2 = std::max(t.dt_per_n2, row.dt / n2);
        t.pf_per_n2 = std::max(t.pf_per_n2, row.pf / n2);
        t.rows.push_back(row);
    }
    return t;
}

nlohmann::json to_json(const SizeTable& t) {
    auto rows = nlohmann::json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"n", r.n},
                        {"cp", r.cp},
                        {"cp_predicted", r.cp_predicted},
                        {"cc_constraints", r.cc_constraints},
                        {"cc_rules", r.cc_rules},
                        {"dt", r.dt},
                        {"pf", r.pf},
                        {"tv", r.tv}});
    return {{"rows", rows}, {"fit", {{"dt_per_n2", t.dt_per_n2}, {"pf_per_n2", t.pf_per_n2}}}};
}

} // namespace lpsucc

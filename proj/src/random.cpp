#include "lpsucc/random.hpp"

namespace lpsucc {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Program random_program(Rng& rng, const RandomProgramParams& params) {
    const std::size_t n = uniform(rng, 1, params.max_n);
    const std::size_t rules = uniform(rng, 1, params.max_rules);
    const std::size_t forms = params.normal ? 2 : 3;
    Program p(n);
    for (std::size_t r = 0; r < rules; ++r) {
        Head head{static_cast<Var>(uniform(rng, 0, n))};
        std::vector<RuleElement> body;
        const std::size_t len = uniform(rng, 0, params.max_body);
        for (std::size_t k = 0; k < len; ++k) {
            std::size_t pick = uniform(rng, 0, forms * n + 1);
            if (pick == 0) {
                body.push_back(RuleElement::top());
            } else if (pick == 1) {
                body.push_back(RuleElement::bottom());
            } else {
                Var x = static_cast<Var>((pick - 2) % n + 1);
                switch ((pick - 2) / n) {
                    case 0: body.push_back(RuleElement::pos(x)); break;
                    case 1: body.push_back(RuleElement::neg(x)); break;
                    default: body.push_back(RuleElement::negneg(x)); break;
                }
            }
        }
        p.add(Rule{head, Body(std::move(body))});
    }
    return p;
}

Formula random_formula(Rng& rng, std::size_t n, std::size_t max_depth) {
    if (max_depth == 0 || uniform(rng, 0, 3) == 0) {
        std::size_t pick = uniform(rng, 0, 2 * n + 1);
        if (pick == 0) return uniform(rng, 0, 1) ? Formula::top() : Formula::bottom();
        return Formula::var(static_cast<Var>((pick - 1) % n + 1));
    }
    const std::size_t op = uniform(rng, 0, 4);
    Formula a = random_formula(rng, n, max_depth - 1);
    if (op == 0) return negate(a);
    Formula b = random_formula(rng, n, max_depth - 1); // sequenced for reproducibility
    switch (op) {
        case 1: return conjoin(a, b);
        case 2: return disjoin(a, b);
        case 3: return implies(a, b);
        default: return equiv(a, b);
    }
}

CausalTheory random_theory(Rng& rng, const RandomTheoryParams& params) {
    const std::size_t n = uniform(rng, 1, params.max_n);
    const std::size_t rules = uniform(rng, 1, params.max_rules);
    CausalTheory d{n, {}};
    auto literal = [&] {
        Var x = static_cast<Var>(uniform(rng, 1, n));
        return Literal{x, uniform(rng, 0, 1) == 1};
    };
    for (std::size_t r = 0; r < rules; ++r) {
        LiteralHead head;
        if (std::size_t pick = uniform(rng, 0, 2 * n); pick > 0) head = Literal{static_cast<Var>((pick - 1) % n + 1), pick <= n};
        Formula body;
        if (params.formula_bodies) {
            body = random_formula(rng, n, 3);
        } else {
            std::vector<Formula> lits;
            for (std::size_t k = uniform(rng, 0, 3); k > 0; --k) {
                auto l = literal();
                lits.push_back(l.positive ? Formula::var(l.atom) : negate(Formula::var(l.atom)));
            }
            body = conjoin(std::move(lits));
        }
        d.rules.push_back({head, body});
    }
    return d;
}

} // namespace lpsucc

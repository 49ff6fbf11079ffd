#include "lpsucc/completion.hpp"

#include "lpsucc/errors.hpp"
#include "lpsucc/stable.hpp"

#include <algorithm>
#include <functional>

namespace lpsucc {

Formula body_formula(const Body& body, bool flatten_double_negation) {
    std::vector<Formula> parts;
    parts.reserve(body.size());
    for (const auto& e : body) {
        switch (e.kind) {
            case ElementKind::Top: parts.push_back(Formula::top()); break;
            case ElementKind::Bot: parts.push_back(Formula::bottom()); break;
            case ElementKind::Atom: parts.push_back(Formula::var(e.atom)); break;
            case ElementKind::Not: parts.push_back(negate(Formula::var(e.atom))); break;
            case ElementKind::NotNot:
                parts.push_back(flatten_double_negation ? Formula::var(e.atom)
                                                        : negate(negate(Formula::var(e.atom))));
                break;
        }
    }
    return conjoin(std::move(parts));
}

std::vector<Formula> completion(const Program& p, bool flatten_double_negation) {
    const std::size_t n = p.signature_size();
    std::vector<std::vector<const Body*>> bodies(n + 1);
    for (const auto& r : p.rules())
        if (!r.head.is_bottom()) bodies[r.head.atom].push_back(&r.body);
    std::vector<Formula> out;
    out.reserve(n);
    for (Var x = 1; x <= n; ++x) {
        auto& bs = bodies[x];
        std::sort(bs.begin(), bs.end(), [](const Body* a, const Body* b) { return *a < *b; });
        std::vector<Formula> disjuncts;
        for (const Body* b : bs) disjuncts.push_back(body_formula(*b, flatten_double_negation));
        out.push_back(equiv(Formula::var(x), disjoin(std::move(disjuncts))));
    }
    for (const auto& r : p.rules())
        if (r.head.is_bottom()) out.push_back(negate(body_formula(r.body, flatten_double_negation)));
    return out;
}

// ---------------------------------------------------------------------------
// Graph

DependencyGraph::DependencyGraph(const Program& p) : n_(p.signature_size()), succ_(n_ + 1) {
    for (const auto& r : p.rules()) {
        if (r.head.is_bottom()) continue;
        for (Var y : body_vars(r.body)) succ_[r.head.atom].push_back(y);
    }
    for (auto& s : succ_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
}

bool DependencyGraph::has_edge(Var from, Var to) const {
    if (from == 0 || from > n_) return false;
    return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

std::vector<std::vector<Var>> strongly_connected_components(const DependencyGraph& g,
                                                            const std::vector<bool>& allowed) {
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n + 1, 0), low(n + 1, 0);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<Var> stack;
    std::vector<std::vector<Var>> out;
    std::size_t counter = 0;

    std::function<void(Var)> visit = [&](Var v) {
        index[v] = low[v] = ++counter;
        stack.push_back(v);
        on_stack[v] = true;
        for (Var w : g.successors(v)) {
            if (!allowed[w]) continue;
            if (index[w] == 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<Var> comp;
            Var w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (Var v = 1; v <= n; ++v)
        if (allowed[v] && index[v] == 0) visit(v);
    return out;
}

bool is_loop(const DependencyGraph& g, const std::vector<Var>& atoms) {
    if (atoms.empty()) return false;
    for (Var x : atoms)
        if (x == 0 || x > g.size()) return false;
    if (atoms.size() == 1) return g.has_edge(atoms[0], atoms[0]);
    std::vector<bool> allowed(g.size() + 1, false);
    for (Var x : atoms) allowed[x] = true;
    auto sccs = strongly_connected_components(g, allowed);
    return sccs.size() == 1;
}

namespace {

// Enumerates strongly connected vertex sets U with required ⊆ U ⊆ candidates.
// Each call first shrinks candidates to the SCC holding the required vertices,
// then branches on the smallest optional vertex.
class LoopEnumerator {
public:
    LoopEnumerator(const DependencyGraph& g, std::size_t cap) : g_(g), cap_(cap) {}

    void run() {
        const std::size_t n = g_.size();
        for (Var v = 1; v <= n; ++v) {
            std::vector<bool> cand(n + 1, false);
            for (Var w = v; w <= n; ++w) cand[w] = true;
            std::vector<bool> req(n + 1, false);
            req[v] = true;
            search(req, v, std::move(cand));
        }
        std::sort(loops_.begin(), loops_.end());
    }

    std::vector<Loop> take() { return std::move(loops_); }

private:
    void search(std::vector<bool>& required, Var anchor, std::vector<bool> cand) {
        const std::size_t n = g_.size();
        std::vector<Var> comp;
        for (auto& c : strongly_connected_components(g_, cand)) {
            if (std::binary_search(c.begin(), c.end(), anchor)) {
                comp = std::move(c);
                break;
            }
        }
        std::fill(cand.begin(), cand.end(), false);
        for (Var x : comp) cand[x] = true;
        for (Var x = 1; x <= n; ++x)
            if (required[x] && !cand[x]) return;

        Var branch = 0;
        for (Var x : comp) {
            if (!required[x]) {
                branch = x;
                break;
            }
        }
        if (branch == 0) {
            if (comp.size() > 1 || g_.has_edge(anchor, anchor)) emit(comp);
            return;
        }
        required[branch] = true;
        search(required, anchor, cand);
        required[branch] = false;
        cand[branch] = false;
        search(required, anchor, std::move(cand));
    }

    void emit(std::vector<Var> atoms) {
        if (loops_.size() >= cap_)
            throw CapExceeded("loop count exceeds cap " + std::to_string(cap_));
        loops_.push_back(Loop{std::move(atoms)});
    }

    const DependencyGraph& g_;
    std::size_t cap_;
    std::vector<Loop> loops_;
};

} // namespace

std::vector<Loop> enumerate_loops(const Program& p, const EnumerationCaps& caps) {
    DependencyGraph g(p);
    LoopEnumerator e(g, caps.max_loops);
    e.run();
    return e.take();
}

Formula loop_formula(const Loop& loop, const Program& p) {
    DependencyGraph g(p);
    if (!is_loop(g, loop.atoms)) throw PreconditionError("not a loop of the program");
    auto in_loop = [&](Var x) { return std::binary_search(loop.atoms.begin(), loop.atoms.end(), x); };
    std::vector<Formula> external;
    for (const auto& r : p.rules()) {
        if (r.head.is_bottom() || !in_loop(r.head.atom)) continue;
        auto vs = body_vars(r.body);
        if (std::none_of(vs.begin(), vs.end(), in_loop)) external.push_back(body_formula(r.body));
    }
    std::vector<Formula> falsify;
    for (Var x : loop.atoms) falsify.push_back(negate(Formula::var(x)));
    return implies(negate(disjoin(std::move(external))), conjoin(std::move(falsify)));
}

Formula loop_formulas(const Program& p, const EnumerationCaps& caps) {
    std::vector<Formula> parts;
    for (const auto& l : enumerate_loops(p, caps)) parts.push_back(loop_formula(l, p));
    return conjoin(std::move(parts));
}

namespace {

CheckResult compare_sets(const std::vector<Interpretation>& ans, const std::vector<Interpretation>& mods,
                         const std::string& rhs_name) {
    CheckResult res;
    std::vector<Interpretation> diff;
    auto by_string = [](const Interpretation& a, const Interpretation& b) { return a.to_string() < b.to_string(); };
    std::set_symmetric_difference(ans.begin(), ans.end(), mods.begin(), mods.end(), std::back_inserter(diff),
                                  by_string);
    res.holds = diff.empty();
    if (res.holds) {
        res.detail = "Ans equals " + rhs_name + " (" + std::to_string(ans.size()) + " interpretations)";
    } else {
        res.witness = diff.front();
        bool in_ans = std::binary_search(ans.begin(), ans.end(), diff.front(), by_string);
        res.detail = diff.front().to_string() + (in_ans ? " is an answer set but not in " : " is in ") +
                     rhs_name + (in_ans ? "" : " but not an answer set");
    }
    return res;
}

} // namespace

CheckResult check_lin_zhao(const Program& p, const EnumerationCaps& caps) {
    auto ans = answer_sets(p, caps).answer_sets;
    auto formulas = completion(p);
    formulas.push_back(loop_formulas(p, caps));
    return compare_sets(ans, models(formulas, p.signature_size(), caps), "M(Comp ∪ LF)");
}

CheckResult check_fages(const Program& p, const EnumerationCaps& caps) {
    auto loops = enumerate_loops(p, caps);
    if (!loops.empty()) {
        CheckResult res;
        res.detail = "program has " + std::to_string(loops.size()) + " loop(s)";
        return res;
    }
    auto ans = answer_sets(p, caps).answer_sets;
    return compare_sets(ans, models(completion(p), p.signature_size(), caps), "M(Comp)");
}

} // namespace lpsucc

#pragma once

#include "lpsucc/caps.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/program.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lpsucc {

/// B̃: conjunction of the body elements with `not` read as ¬. With
/// flatten_double_negation, `not not x` becomes x instead of ¬¬x.
Formula body_formula(const Body& body, bool flatten_double_negation = true);

/// Comp(Π): one `x ≡ B̃1 ∨ ... ∨ B̃m` per signature variable (x ≡ ⊥ when x
/// heads no rule), then one ¬B̃ per constraint `⊥ ← B` in rule order.
/// Disjuncts follow canonical body order.
std::vector<Formula> completion(const Program& p, bool flatten_double_negation = true);

/// Positive dependency graph: edge (x, y) iff some rule with head x has the
/// bare atom y in its body. Vertices are x1..xn.
class DependencyGraph {
public:
    explicit DependencyGraph(const Program& p);

    std::size_t size() const { return n_; }
    /// Sorted successors of x.
    const std::vector<Var>& successors(Var x) const { return succ_[x]; }
    bool has_edge(Var from, Var to) const;

private:
    std::size_t n_;
    std::vector<std::vector<Var>> succ_; // index 0 unused
};

inline DependencyGraph dependency_graph(const Program& p) { return DependencyGraph(p); }

/// Tarjan SCCs of the subgraph induced by `allowed` (indexed by Var, size n+1).
/// Each component is sorted; components are in reverse topological order.
std::vector<std::vector<Var>> strongly_connected_components(const DependencyGraph& g,
                                                            const std::vector<bool>& allowed);

struct Loop {
    /// Sorted, nonempty.
    std::vector<Var> atoms;

    bool singleton() const { return atoms.size() == 1; }
    friend auto operator<=>(const Loop&, const Loop&) = default;
};

bool is_loop(const DependencyGraph& g, const std::vector<Var>& atoms);

/// Every loop of Π, sorted lexicographically by atom list. Throws CapExceeded
/// once more than caps.max_loops loops exist.
std::vector<Loop> enumerate_loops(const Program& p, const EnumerationCaps& caps = {});

/// ¬[B̃1 ∨ ... ∨ B̃m] ⊃ ⋀_{x∈U} ¬x over the bodies of R−(U, Π).
/// Throws PreconditionError if U is not a loop of Π.
Formula loop_formula(const Loop& loop, const Program& p);

/// LF(Π): conjunction of all loop formulas (⊤ for loop-free programs).
Formula loop_formulas(const Program& p, const EnumerationCaps& caps = {});

struct CheckResult {
    bool holds = false;
    std::string detail;
    /// An interpretation on which the two sides disagree, when one exists.
    std::optional<Interpretation> witness;

    explicit operator bool() const { return holds; }
};

/// Ans(Π) = M(Comp(Π) ∪ LF(Π)).
CheckResult check_lin_zhao(const Program& p, const EnumerationCaps& caps = {});
/// Π has no loops and Ans(Π) = M(Comp(Π)).
CheckResult check_fages(const Program& p, const EnumerationCaps& caps = {});

} // namespace lpsucc

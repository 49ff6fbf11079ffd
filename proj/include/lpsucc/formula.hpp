#pragma once

#include "lpsucc/caps.hpp"
#include "lpsucc/program.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpsucc {

enum class FormulaKind : std::uint8_t { Var, True, False, Not, And, Or, Implies, Equiv };

/// Immutable propositional formula tree with shared subterms. ∧ and ∨ are
/// n-ary; ⊃ and ≡ are primitive binary connectives.
class Formula {
public:
    /// ⊤
    Formula();

    static Formula var(Var x);
    static Formula top();
    static Formula bottom();

    FormulaKind kind() const;
    Var atom() const;
    std::span<const Formula> children() const;

    bool is_literal() const;

    friend bool operator==(const Formula& a, const Formula& b);

    struct Node; // opaque

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(FormulaKind k, Var x, std::vector<Formula> kids);

    friend Formula negate(Formula f);
    friend Formula conjoin(std::vector<Formula> fs);
    friend Formula disjoin(std::vector<Formula> fs);
    friend Formula implies(Formula a, Formula b);
    friend Formula equiv(Formula a, Formula b);

    std::shared_ptr<const Node> node_;
};

Formula negate(Formula f);
/// Empty conjunction is ⊤; a single conjunct is returned unchanged.
Formula conjoin(std::vector<Formula> fs);
/// Empty disjunction is ⊥; a single disjunct is returned unchanged.
Formula disjoin(std::vector<Formula> fs);
Formula implies(Formula a, Formula b);
Formula equiv(Formula a, Formula b);

inline Formula conjoin(Formula a, Formula b) { return conjoin(std::vector<Formula>{std::move(a), std::move(b)}); }
inline Formula disjoin(Formula a, Formula b) { return disjoin(std::vector<Formula>{std::move(a), std::move(b)}); }

bool evaluate(const Formula& f, const Interpretation& I);
/// Bit (i-1) of I is x_i.
bool evaluate(const Formula& f, std::uint64_t I);

struct FormulaMetrics {
    /// Connective occurrences: a k-ary ∧/∨ counts k-1; ¬, ⊃, ≡ count one.
    std::size_t size = 0;
    /// Nesting of ∧/∨/⊃/≡; ¬ is not counted.
    std::size_t depth = 0;
};

FormulaMetrics formula_metrics(const Formula& f);
/// Metrics of the conjunction of a formula set.
FormulaMetrics formula_metrics(std::span<const Formula> fs);

/// Largest variable index occurring in f (0 if none).
Var max_var(const Formula& f);

/// All interpretations over x1..xn satisfying every formula, sorted by bitstring.
std::vector<Interpretation> models(std::span<const Formula> fs, std::size_t n,
                                   const EnumerationCaps& caps = {});
std::vector<Interpretation> models(const Formula& f, std::size_t n, const EnumerationCaps& caps = {});

/// Infix text: `! & | -> <->`, `#true`, `#false`, `x<i>`. Binary operators
/// are parenthesized unless they bind tighter than their context.
std::string render_formula(const Formula& f);

struct ParsedFormula {
    Formula formula;
    std::size_t signature_size = 0;
};

/// Parses infix text. Precedence, tightest first: `!`/`-`, `&`, `|`, `->`
/// (right associative), `<->`. An optional `#vars n.` header fixes the signature.
ParsedFormula parse_formula(std::string_view text);

/// Parses one formula per `.`-terminated statement (used for formula files).
struct ParsedFormulaSet {
    std::vector<Formula> formulas;
    std::size_t signature_size = 0;
};
ParsedFormulaSet parse_formula_set(std::string_view text);

/// Literal, clause (disjunction of literals), or conjunction of clauses; ⊤
/// and ⊥ also qualify.
bool is_cnf(const Formula& f);

/// DIMACS CNF for a set of CNF-shaped formulas over n variables, without any
/// auxiliary variables. Throws PreconditionError if some formula is not CNF.
std::string to_dimacs(std::span<const Formula> fs, std::size_t n);

} // namespace lpsucc

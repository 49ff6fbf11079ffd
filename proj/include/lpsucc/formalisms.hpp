#pragma once

#include "lpsucc/caps.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/program.hpp"
#include "lpsucc/stable.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpsucc {

// ---------------------------------------------------------------------------
// Cardinality constraints and choice rules (CC)

/// lower ≤ {elements} ≤ upper over atoms and `not` atoms.
struct CardinalityConstraint {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<RuleElement> elements; // sorted, unique; Atom or Not only

    /// Throws PreconditionError unless 0 ≤ lower ≤ upper ≤ |elements| and every
    /// element is an atom or a `not` atom.
    CardinalityConstraint(std::size_t lower, std::size_t upper, std::vector<RuleElement> elements);

    /// Number of elements satisfied by I.
    std::size_t satisfied_count(const Interpretation& I) const;

    friend bool operator==(const CardinalityConstraint&, const CardinalityConstraint&) = default;
};

bool cc_satisfies(const Interpretation& I, const CardinalityConstraint& c);

struct CCRule {
    enum class HeadKind { Atom, Bottom, Choice };
    HeadKind kind = HeadKind::Bottom;
    Var atom = 0;            // HeadKind::Atom
    std::vector<Var> choice; // HeadKind::Choice, sorted
    std::vector<RuleElement> literals; // Atom or Not
    std::vector<CardinalityConstraint> constraints;

    friend bool operator==(const CCRule&, const CCRule&) = default;
};

struct CCProgram {
    std::size_t signature_size = 0;
    std::vector<CCRule> rules;

    std::size_t size() const { return rules.size(); }
    /// Number of cardinality constraints; the size measure for PARITY bounds.
    std::size_t constraint_count() const;
};

bool cc_is_answer_set(const CCProgram& p, const Interpretation& I);
AnswerSetReport cc_answer_sets(const CCProgram& p, const EnumerationCaps& caps = {});

/// `{x1; x2}.`, `x3 :- x1, not x2, 1 {x1; not x2} 2.`, `#false :- 0 {x1; x2} 0.`
CCProgram parse_cc(std::string_view text);
std::string render_cc(const CCProgram& p);

// ---------------------------------------------------------------------------
// Literals shared by DT and TV

struct Literal {
    Var atom = 0;
    bool positive = true;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Head of a causal or two-valued rule: a literal, or ⊥ when empty.
using LiteralHead = std::optional<Literal>;

/// A set of literals plus a ⊥ marker.
class LiteralSet {
public:
    explicit LiteralSet(std::size_t n) : pos_(n + 1, false), neg_(n + 1, false) {}

    /// Returns true if the set changed.
    bool insert(const LiteralHead& h);
    bool contains(const Literal& l) const { return l.positive ? pos_.at(l.atom) : neg_.at(l.atom); }
    bool has_bottom() const { return bottom_; }

    /// No complementary pair and no ⊥.
    bool consistent() const;
    /// Every variable of x1..n occurs positively or negatively.
    bool complete() const;
    bool satisfied_by(const Interpretation& I) const;
    /// A consistent, complete set has exactly this model.
    Interpretation as_interpretation() const;

private:
    std::vector<bool> pos_, neg_;
    bool bottom_ = false;
};

// ---------------------------------------------------------------------------
// Definite causal theories (DT)

struct CausalRule {
    LiteralHead head;
    Formula body;
};

struct CausalTheory {
    std::size_t signature_size = 0;
    std::vector<CausalRule> rules;

    /// Every body is a conjunction of literals (⊤ included).
    bool is_simple() const;
    /// Rule count when simple; otherwise connectives in bodies plus negated heads.
    std::size_t size() const;
};

/// D^I: heads of rules whose bodies I satisfies.
LiteralSet dt_reduct(const CausalTheory& d, const Interpretation& I);
/// I is the unique model of D^I.
bool dt_is_model(const CausalTheory& d, const Interpretation& I);
AnswerSetReport dt_models(const CausalTheory& d, const EnumerationCaps& caps = {});

/// `x1 <= x1 & -x2.`, `-x1 <= -x1.`, `#false <= !(x1 | x2).`
CausalTheory parse_dt(std::string_view text);
std::string render_dt(const CausalTheory& d);

// ---------------------------------------------------------------------------
// Two-valued programs (TV)

struct TVRule {
    LiteralHead head;
    std::vector<Literal> body; // sorted, unique
    Formula guard;
};

struct TVProgram {
    std::size_t signature_size = 0;
    std::vector<TVRule> rules;

    std::size_t size() const { return rules.size(); }
};

struct LiteralRule {
    LiteralHead head;
    std::vector<Literal> body;
};

/// Π^I: `H ← B` for each rule whose guard I satisfies.
std::vector<LiteralRule> tv_reduct(const TVProgram& p, const Interpretation& I);
/// Least literal set closed under the rules.
LiteralSet tv_closure(std::span<const LiteralRule> rules, std::size_t n);
bool tv_is_model(const TVProgram& p, const Interpretation& I);
AnswerSetReport tv_models(const TVProgram& p, const EnumerationCaps& caps = {});

/// `x1 :- x2, -x3 : -x1 | x2.`; the literal list may be empty: `x1 :- : x1.`
TVProgram parse_tv(std::string_view text);
std::string render_tv(const TVProgram& p);

// ---------------------------------------------------------------------------
// Translations into TV

/// H ⇐ G becomes H ← : G.
TVProgram dt_to_tv(const CausalTheory& d);
/// H ← u, not y, not not z becomes H ← u : ¬y ∧ z, plus ¬x ← : ¬x for every
/// signature variable.
TVProgram cp_to_tv(const Program& p);
/// x ← : x and ¬x ← : ¬x for each variable, then ⊥ ← : ¬φ written as the two
/// clashing rules x1 ← : ¬φ and ¬x1 ← : ¬φ. Requires n ≥ 1.
TVProgram pf_to_tv(const Formula& phi, std::size_t n);

} // namespace lpsucc

#pragma once

#include "lpsucc/caps.hpp"
#include "lpsucc/program.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <vector>

namespace lpsucc {

/// A program whose bodies hold only ⊤, ⊥ and bare atoms. Unlike Program the
/// rule list is not deduplicated, so a reduct keeps one rule per source rule.
struct BasicProgram {
    std::size_t signature_size = 0;
    std::vector<Rule> rules;
};

bool satisfies(const Interpretation& I, const RuleElement& e);
bool satisfies(const Interpretation& I, const Body& body);
/// I is closed under the rule: body satisfied implies head satisfied (⊥ never is).
bool satisfies(const Interpretation& I, const Rule& r);

/// Π^I: `not not x` becomes ⊤ iff x ∈ I, `not x` becomes ⊤ iff x ∉ I, ⊥ otherwise.
BasicProgram reduct(const Program& p, const Interpretation& I);

struct LeastModel {
    Interpretation model;
    bool bottom_derived = false;
    /// Applications of T that added something.
    std::size_t rounds = 0;
};

/// Least fixpoint of T_Π from ∅, computed round by round.
LeastModel least_model(const BasicProgram& p);

bool is_answer_set(const Program& p, const Interpretation& I);

struct AnswerSetReport {
    std::size_t n = 0;
    /// Sorted lexicographically by bitstring, duplicate-free.
    std::vector<Interpretation> answer_sets;

    std::vector<std::string> strings() const;
    friend bool operator==(const AnswerSetReport&, const AnswerSetReport&) = default;
};

/// Builds a report from an arbitrary list, sorting and deduplicating.
AnswerSetReport make_report(std::size_t n, std::vector<Interpretation> sets);

/// {"n": n, "answer_sets": [...], "count": k}
nlohmann::json to_json(const AnswerSetReport& r);

AnswerSetReport answer_sets(const Program& p, const EnumerationCaps& caps = {});

/// No member is a proper subset of another.
bool is_antichain(const AnswerSetReport& r);
/// True iff the report is exactly the odd strings of length n.
bool is_parity_report(const AnswerSetReport& r, std::size_t n);
/// Ans(Π) equals PARITY_n over the declared signature (which must be n).
bool represents_parity(const Program& p, std::size_t n, const EnumerationCaps& caps = {});

} // namespace lpsucc

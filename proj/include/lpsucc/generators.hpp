#pragma once

#include "lpsucc/formalisms.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/program.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lpsucc {

/// x_i ← not not x_i for i < n, then x_n ← body(w) for every even w ∈ {0,1}^{n-1}
/// in lexicographic order. n = 1 gives {x1.}. Throws PreconditionError for n = 0.
Program gen_parity_cp(std::size_t n);
/// Normal program for n ≤ 2; n ≥ 3 is refused with PreconditionError because no
/// normal program has the odd strings as answer sets.
Program gen_parity_lp(std::size_t n);
/// {x1..xn}. plus ⊥ ← k ≤ {x1..xn} ≤ k for each even k in 0..n.
CCProgram gen_parity_cc(std::size_t n);
/// Left-balanced XOR tree, xor(a, b) = (a ∧ ¬b) ∨ (¬a ∧ b).
Formula gen_parity_pf(std::size_t n);
/// x ⇐ x, ¬x ⇐ ¬x for each variable, then ⊥ ⇐ ¬gen_parity_pf(n).
CausalTheory gen_parity_dt(std::size_t n);
/// pf_to_tv(gen_parity_pf(n), n).
TVProgram gen_parity_tv(std::size_t n);

/// Closed forms for the generated sizes.
std::size_t predicted_cp_size(std::size_t n);
std::size_t predicted_cc_constraints(std::size_t n);
std::size_t predicted_pf_size(std::size_t n);
std::size_t predicted_dt_size(std::size_t n);
std::size_t predicted_tv_size(std::size_t n);

enum class FormalismTag { CP, LP, CC, DT, TV, PF };

std::string_view formalism_name(FormalismTag f);
/// "cp", "lp", ... Returns nullopt for anything else.
std::optional<FormalismTag> parse_formalism(std::string_view name);

struct GeneratedInstance {
    FormalismTag formalism = FormalismTag::CP;
    std::size_t n = 0;
    std::variant<Program, CCProgram, CausalTheory, TVProgram, Formula> instance;
    /// Size under the formalism's own measure: rules (CP, LP, TV), cardinality
    /// constraints (CC), connectives (PF, non-simple DT).
    std::size_t reported_size = 0;
    std::size_t predicted_size = 0;

    /// Text in the formalism's input syntax.
    std::string render() const;
    /// Models or answer sets by exhaustive enumeration.
    AnswerSetReport solve(const EnumerationCaps& caps = {}) const;
};

GeneratedInstance generate_parity(FormalismTag f, std::size_t n);

struct SizeRow {
    std::size_t n = 0;
    std::size_t cp = 0;
    std::size_t cp_predicted = 0;
    std::size_t cc_constraints = 0;
    std::size_t cc_rules = 0;
    std::size_t dt = 0;
    std::size_t pf = 0;
    std::size_t tv = 0;
};

struct SizeTable {
    std::vector<SizeRow> rows;
    /// max over rows of size / n².
    double dt_per_n2 = 0;
    double pf_per_n2 = 0;
};

/// Rows n = 1..n_max from generation and counting only.
SizeTable size_table(std::size_t n_max);

nlohmann::json to_json(const SizeTable& t);

} // namespace lpsucc

#pragma once

#include "lpsucc/formalisms.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/program.hpp"

#include <cstddef>
#include <random>

namespace lpsucc {

using Rng = std::mt19937_64;

/// n uniform in [1, max_n]; rule count uniform in [1, max_rules]; head uniform
/// over {⊥, x1..xn}; body length uniform in [0, max_body]; each element uniform
/// over ⊤, ⊥ and the n atoms in each of the forms x, not x, not not x
/// (`not not` omitted when normal). Duplicate rules collapse, so the final
/// size may be smaller than the drawn count.
struct RandomProgramParams {
    std::size_t max_n = 5;
    std::size_t max_rules = 12;
    std::size_t max_body = 4;
    bool normal = false;
};

Program random_program(Rng& rng, const RandomProgramParams& params);

/// Leaves are variables (⊤ or ⊥ with small probability); inner nodes draw
/// uniformly from ¬, binary ∧, binary ∨, ⊃, ≡.
Formula random_formula(Rng& rng, std::size_t n, std::size_t max_depth);

/// Heads uniform over {⊥, x_i, ¬x_i}; bodies are conjunctions of up to three
/// random literals, or random formulas of depth ≤ 3 when formula_bodies is set.
struct RandomTheoryParams {
    std::size_t max_n = 4;
    std::size_t max_rules = 8;
    bool formula_bodies = false;
};

CausalTheory random_theory(Rng& rng, const RandomTheoryParams& params);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

} // namespace lpsucc

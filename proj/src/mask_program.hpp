#pragma once

// Bitmask form of a canonical program for exhaustive enumeration (n <= 62).

#include "lpsucc/program.hpp"

#include <cstdint>
#include <vector>

namespace lpsucc::detail {

struct MaskRule {
    Var head = 0; // 0 is ⊥
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    std::uint64_t negneg = 0;
    bool dead = false; // ⊥ in body
};

class MaskProgram {
public:
    explicit MaskProgram(const Program& p);

    /// I = Cn(Π^I) and ⊥ is not derived.
    bool is_answer_set(std::uint64_t I) const;
    std::size_t signature_size() const { return n_; }

private:
    std::size_t n_;
    std::vector<MaskRule> rules_;
};

inline std::uint64_t bit(Var x) { return std::uint64_t{1} << (x - 1); }

} // namespace lpsucc::detail

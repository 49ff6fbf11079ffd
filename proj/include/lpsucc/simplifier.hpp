#pragma once

#include "lpsucc/caps.hpp"
#include "lpsucc/program.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace lpsucc {

/// Oracle verification for the PARITY passes. When enabled and the signature
/// is at most verify_max_vars, inputs are checked to represent PARITY_n and
/// every pass output is checked to keep the answer sets.
struct SimplifyOptions {
    bool verify = true;
    std::size_t verify_max_vars = 10;
    EnumerationCaps caps{};

    bool verifies(std::size_t n) const { return verify && n <= verify_max_vars; }
};

struct PassRecord {
    std::string pass;
    std::size_t deleted = 0;
    std::size_t rewritten = 0;
    std::size_t size_before = 0;
    std::size_t size_after = 0;
    bool verified = false;
    std::vector<std::string> warnings;
};

struct PassResult {
    Program program;
    PassRecord record;
};

struct PipelineTrace {
    std::vector<PassRecord> passes;
};

nlohmann::json to_json(const PassRecord& r);
nlohmann::json to_json(const PipelineTrace& t);

/// Removes rules whose bodies are inconsistent. Keeps Ans for any program.
PassResult drop_inconsistent_rules(const Program& p);

/// Removes every rule x ← B with x ∈ var(B). Keeps Ans for any program.
PassResult drop_singleton_loop_rules(const Program& p);

/// For each x ← B with `not not x` ∈ B whose S(B) is a single string: deletes
/// the rule when that string is even, otherwise drops `not not x`.
/// Expects a PARITY program without singleton-loop rules or inconsistent bodies.
PassResult standardize(const Program& p, const SimplifyOptions& opts = {});

/// Split of a standard PARITY program by whether B ∪ {H} fully covers the
/// signature, with the coverage-lemma checks evaluated on every rule.
struct CoveragePartition {
    /// Rule indices into the program, in order.
    std::vector<std::size_t> f_minus;
    std::vector<std::size_t> f_plus;
    /// One entry per failed lemma check; empty for every PARITY input.
    std::vector<std::string> violations;
};

CoveragePartition coverage_partition(const Program& p);

/// True iff no rule has `not not x` in B while S(B ∪ {x}) is a single string.
bool is_standard(const Program& p);
/// Every F+ rule has var(B) = ∅.
bool is_almost_pure(const Program& p);
/// Every rule has var(B) = ∅.
bool is_pure(const Program& p);

/// B with each bare atom x replaced by `not not x`.
Body purify_body(const Body& body);

/// Rewrites each F+ rule body with purify_body. Throws PreconditionError for
/// non-standard input and LemmaViolation if the coverage checks fail.
PassResult to_almost_pure(const Program& p, const SimplifyOptions& opts = {});

/// Rewrites the remaining non-pure rules one at a time. Throws
/// PreconditionError unless the input is almost pure.
PassResult to_pure(const Program& p, const SimplifyOptions& opts = {});

struct SimplifyResult {
    Program program;
    PipelineTrace trace;
};

/// drop_inconsistent → drop_singleton_loop → standardize → to_almost_pure →
/// to_pure. Throws NotParityError when verification is on and the input does
/// not represent PARITY_n; throws LemmaViolation if a pass changes Ans.
SimplifyResult simplify_parity(const Program& p, const SimplifyOptions& opts = {});

} // namespace lpsucc

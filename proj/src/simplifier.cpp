#include "lpsucc/simplifier.hpp"

#include "lpsucc/errors.hpp"
#include "lpsucc/stable.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace lpsucc {

nlohmann::json to_json(const PassRecord& r) {
    return {{"pass", r.pass},
            {"deleted", r.deleted},
            {"rewritten", r.rewritten},
            {"size_before", r.size_before},
            {"size_after", r.size_after},
            {"verified", r.verified},
            {"warnings", r.warnings}};
}

nlohmann::json to_json(const PipelineTrace& t) {
    auto passes = nlohmann::json::array();
    for (const auto& r : t.passes) passes.push_back(to_json(r));
    return {{"passes", passes}};
}

namespace {

bool is_singleton_loop_rule(const Rule& r) {
    return !r.head.is_bottom() && r.body.contains(RuleElement::pos(r.head.atom));
}

/// B ∪ {H}; ⊥ as a head contributes the ⊥ element.
Body extend_with_head(const Rule& r) {
    std::vector<RuleElement> elems = r.body.elements();
    elems.push_back(r.head.is_bottom() ? RuleElement::bottom() : RuleElement::pos(r.head.atom));
    return Body(std::move(elems));
}

bool in_f_plus(const Rule& r, std::size_t n) { return fully_covers(extend_with_head(r), n); }

PassRecord start_record(std::string name, const Program& p) {
    PassRecord rec;
    rec.pass = std::move(name);
    rec.size_before = p.size();
    return rec;
}

void finish_record(PassRecord& rec, const Program& out) {
    rec.size_after = out.size();
    if (rec.size_after > rec.size_before) throw LemmaViolation(rec.pass + " increased program size");
}

/// Checks the PARITY precondition for the passes that need it.
void require_parity(const Program& p, const SimplifyOptions& opts, PassRecord& rec) {
    const std::size_t n = p.signature_size();
    if (!opts.verifies(n)) {
        rec.warnings.push_back("PARITY precondition not verified (verification off or n above cap)");
        return;
    }
    if (!represents_parity(p, n, opts.caps))
        throw NotParityError(rec.pass + ": input does not represent PARITY_" + std::to_string(n));
}

void verify_same_answers(const Program& before, const Program& after, const SimplifyOptions& opts,
                         PassRecord& rec) {
    if (!opts.verifies(before.signature_size())) return;
    if (answer_sets(before, opts.caps) != answer_sets(after, opts.caps))
        throw LemmaViolation(rec.pass + " changed the answer sets");
    rec.verified = true;
}

void warn_unnormalized(const Program& p, PassRecord& rec) {
    for (const auto& r : p.rules()) {
        if (is_singleton_loop_rule(r)) {
            rec.warnings.push_back("precondition: singleton-loop rule present: " + render_rule(r));
        } else if (!body_consistent(r.body)) {
            rec.warnings.push_back("precondition: inconsistent body present: " + render_rule(r));
        }
    }
}

} // namespace

PassResult drop_inconsistent_rules(const Program& p) {
    PassResult res{Program(p.signature_size()), start_record("drop_inconsistent_rules", p)};
    for (const auto& r : p.rules()) {
        if (body_consistent(r.body))
            res.program.add(r);
        else
            ++res.record.deleted;
    }
    finish_record(res.record, res.program);
    return res;
}

PassResult drop_singleton_loop_rules(const Program& p) {
    PassResult res{Program(p.signature_size()), start_record("drop_singleton_loop_rules", p)};
    for (const auto& r : p.rules()) {
        if (is_singleton_loop_rule(r))
            ++res.record.deleted;
        else
            res.program.add(r);
    }
    finish_record(res.record, res.program);
    return res;
}

bool is_standard(const Program& p) {
    const std::size_t n = p.signature_size();
    return std::none_of(p.rules().begin(), p.rules().end(), [n](const Rule& r) {
        if (r.head.is_bottom() || !r.body.contains(RuleElement::negneg(r.head.atom))) return false;
        return body_profile(extend_with_head(r), n).unique_string.has_value();
    });
}

PassResult standardize(const Program& p, const SimplifyOptions& opts) {
    PassResult res{Program(p.signature_size()), start_record("standardize", p)};
    warn_unnormalized(p, res.record);
    require_parity(p, opts, res.record);
    const std::size_t n = p.signature_size();
    for (const auto& r : p.rules()) {
        const auto nn = RuleElement::negneg(r.head.atom);
        if (r.head.is_bottom() || !r.body.contains(nn)) {
            res.program.add(r);
            continue;
        }
        auto prof = body_profile(r.body, n);
        if (!prof.unique_string) {
            res.program.add(r);
        } else if (prof.unique_string->parity() == 0) {
            ++res.record.deleted;
        } else {
            std::vector<RuleElement> elems;
            for (const auto& e : r.body)
                if (e != nn) elems.push_back(e);
            res.program.add(Rule{r.head, Body(std::move(elems))});
            ++res.record.rewritten;
        }
    }
    if (!is_standard(res.program)) throw LemmaViolation("standardize produced a non-standard program");
    finish_record(res.record, res.program);
    verify_same_answers(p, res.program, opts, res.record);
    return res;
}

CoveragePartition coverage_partition(const Program& p) {
    CoveragePartition cp;
    const std::size_t n = p.signature_size();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rule& r = p.rules()[i];
        const Body ext = extend_with_head(r);
        const bool plus = fully_covers(ext, n);
        (plus ? cp.f_plus : cp.f_minus).push_back(i);

        const bool consistent = body_consistent(r.body);
        auto report = [&](const std::string& what) {
            cp.violations.push_back(what + ": " + render_rule(r));
        };
        if (!r.head.is_bottom()) {
            const Var x = r.head.atom;
            if (consistent && !plus && !r.body.contains(RuleElement::negneg(x)))
                report("coverage (i): B ∪ {x} does not fully cover but `not not x` ∉ B");
            if (plus && consistent && r.body.contains(RuleElement::negneg(x)))
                report("rule with `not not x` in F+ of a standard program");
            auto prof = body_profile(ext, n);
            if (prof.unique_string && prof.unique_string->parity() == 0)
                report("full coverage: unique string of S(B ∪ {x}) is even");
        }
        if (consistent && !body_consistent(ext) && !fully_covers(r.body, n))
            report("coverage (ii): B ∪ {H} inconsistent but B does not fully cover");
    }
    return cp;
}

bool is_almost_pure(const Program& p) {
    const std::size_t n = p.signature_size();
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [n](const Rule& r) { return !in_f_plus(r, n) || body_vars(r.body).empty(); });
}

bool is_pure(const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [](const Rule& r) { return body_vars(r.body).empty(); });
}

Body purify_body(const Body& body) {
    std::vector<RuleElement> elems;
    elems.reserve(body.size());
    for (const auto& e : body)
        elems.push_back(e.kind == ElementKind::Atom ? RuleElement::negneg(e.atom) : e);
    return Body(std::move(elems));
}

PassResult to_almost_pure(const Program& p, const SimplifyOptions& opts) {
    PassResult res{Program(p.signature_size()), start_record("to_almost_pure", p)};
    for (const auto& r : p.rules())
        if (is_singleton_loop_rule(r) || !body_consistent(r.body))
            throw PreconditionError("to_almost_pure: input has singleton-loop rules or inconsistent bodies");
    if (!is_standard(p)) throw PreconditionError("to_almost_pure: input is not standard");
    require_parity(p, opts, res.record);

    auto cp = coverage_partition(p);
    if (!cp.violations.empty()) throw LemmaViolation("coverage lemma violated: " + cp.violations.front());
    std::vector<bool> plus(p.size(), false);
    for (auto i : cp.f_plus) plus[i] = true;

    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rule& r = p.rules()[i];
        if (plus[i] && !body_vars(r.body).empty()) {
            res.program.add(Rule{r.head, purify_body(r.body)});
            ++res.record.rewritten;
        } else {
            res.program.add(r);
        }
    }
    res.record.deleted = p.size() - res.program.size();
    finish_record(res.record, res.program);
    verify_same_answers(p, res.program, opts, res.record);
    return res;
}

PassResult to_pure(const Program& p, const SimplifyOptions& opts) {
    PassResult res{p, start_record("to_pure", p)};
    if (!is_almost_pure(p)) throw PreconditionError("to_pure: input is not almost pure");
    require_parity(p, opts, res.record);

    // One rule per step; each intermediate program is itself almost pure.
    for (;;) {
        const auto& rules = res.program.rules();
        auto it = std::find_if(rules.begin(), rules.end(),
                               [](const Rule& r) { return !body_vars(r.body).empty(); });
        if (it == rules.end()) break;
        Program next(p.signature_size());
        for (const auto& r : rules)
            next.add(&r == &*it ? Rule{r.head, purify_body(r.body)} : r);
        ++res.record.rewritten;
        verify_same_answers(res.program, next, opts, res.record);
        res.program = std::move(next);
    }
    res.record.deleted = p.size() - res.program.size();
    finish_record(res.record, res.program);
    if (opts.verifies(p.signature_size())) res.record.verified = true;
    return res;
}

SimplifyResult simplify_parity(const Program& p, const SimplifyOptions& opts) {
    SimplifyResult out{p, {}};
    const std::size_t n = p.signature_size();
    if (opts.verifies(n) && !represents_parity(p, n, opts.caps))
        throw NotParityError("input does not represent PARITY_" + std::to_string(n));

    auto run = [&](PassResult step) {
        verify_same_answers(out.program, step.program, opts, step.record);
        out.program = std::move(step.program);
        out.trace.passes.push_back(std::move(step.record));
    };
    run(drop_inconsistent_rules(out.program));
    run(drop_singleton_loop_rules(out.program));
    run(standardize(out.program, opts));
    run(to_almost_pure(out.program, opts));
    run(to_pure(out.program, opts));
    if (!is_pure(out.program)) throw LemmaViolation("pipeline output is not pure");
    return out;
}

} // namespace lpsucc

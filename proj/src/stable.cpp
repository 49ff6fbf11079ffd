#include "lpsucc/stable.hpp"

#include "lpsucc/errors.hpp"
#include "mask_program.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace lpsucc {

namespace detail {

MaskProgram::MaskProgram(const Program& p) : n_(p.signature_size()) {
    if (n_ > 64) throw CapExceeded("mask engine supports at most 64 variables");
    rules_.reserve(p.size());
    for (const auto& r : p.rules()) {
        MaskRule m;
        m.head = r.head.atom;
        for (const auto& e : r.body) {
            switch (e.kind) {
                case ElementKind::Top: break;
                case ElementKind::Bot: m.dead = true; break;
                case ElementKind::Atom: m.pos |= bit(e.atom); break;
                case ElementKind::Not: m.neg |= bit(e.atom); break;
                case ElementKind::NotNot: m.negneg |= bit(e.atom); break;
            }
        }
        if (!m.dead) rules_.push_back(m);
    }
}

bool MaskProgram::is_answer_set(std::uint64_t I) const {
    // Active rules of Π^I, then the least model restricted early: Cn grows
    // monotonically, so any derived atom outside I (or ⊥) rules I out.
    std::vector<const MaskRule*> active;
    active.reserve(rules_.size());
    for (const auto& r : rules_)
        if ((r.neg & I) == 0 && (r.negneg & ~I) == 0) active.push_back(&r);
    std::uint64_t model = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const MaskRule* r : active) {
            if ((r->pos & ~model) != 0) continue;
            if (r->head == 0) return false;
            std::uint64_t h = bit(r->head);
            if (model & h) continue;
            if ((h & I) == 0) return false;
            model |= h;
            changed = true;
        }
    }
    return model == I;
}

} // namespace detail

bool satisfies(const Interpretation& I, const RuleElement& e) {
    switch (e.kind) {
        case ElementKind::Top: return true;
        case ElementKind::Bot: return false;
        case ElementKind::Atom:
        case ElementKind::NotNot: return I.contains(e.atom);
        case ElementKind::Not: return !I.contains(e.atom);
    }
    return false;
}

bool satisfies(const Interpretation& I, const Body& body) {
    return std::all_of(body.begin(), body.end(), [&](const RuleElement& e) { return satisfies(I, e); });
}

bool satisfies(const Interpretation& I, const Rule& r) {
    if (!satisfies(I, r.body)) return true;
    return !r.head.is_bottom() && I.contains(r.head.atom);
}

BasicProgram reduct(const Program& p, const Interpretation& I) {
    BasicProgram out{p.signature_size(), {}};
    out.rules.reserve(p.size());
    for (const auto& r : p.rules()) {
        std::vector<RuleElement> body;
        for (const auto& e : r.body) {
            if (e.kind == ElementKind::Not || e.kind == ElementKind::NotNot)
                body.push_back(satisfies(I, e) ? RuleElement::top() : RuleElement::bottom());
            else
                body.push_back(e);
        }
        out.rules.push_back(Rule{r.head, Body(std::move(body))});
    }
    return out;
}

LeastModel least_model(const BasicProgram& p) {
    LeastModel lm{Interpretation(p.signature_size), false, 0};
    for (;;) {
        // T(M) is computed from the previous round's M only.
        Interpretation next = lm.model;
        bool bottom = lm.bottom_derived;
        for (const auto& r : p.rules) {
            if (!satisfies(lm.model, r.body)) continue;
            if (r.head.is_bottom())
                bottom = true;
            else
                next.set(r.head.atom);
        }
        if (next == lm.model && bottom == lm.bottom_derived) return lm;
        lm.model = std::move(next);
        lm.bottom_derived = bottom;
        ++lm.rounds;
    }
}

bool is_answer_set(const Program& p, const Interpretation& I) {
    if (I.size() != p.signature_size()) return false;
    auto lm = least_model(reduct(p, I));
    return !lm.bottom_derived && lm.model == I;
}

std::vector<std::string> AnswerSetReport::strings() const {
    std::vector<std::string> out;
    out.reserve(answer_sets.size());
    for (const auto& I : answer_sets) out.push_back(I.to_string());
    return out;
}

AnswerSetReport make_report(std::size_t n, std::vector<Interpretation> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return {n, std::move(sets)};
}

nlohmann::json to_json(const AnswerSetReport& r) {
    return {{"n", r.n}, {"answer_sets", r.strings()}, {"count", r.answer_sets.size()}};
}

AnswerSetReport answer_sets(const Program& p, const EnumerationCaps& caps) {
    const std::size_t n = p.signature_size();
    require_enumerable(n, caps);
    detail::MaskProgram mp(p);
    std::vector<Interpretation> found;
    for (std::uint64_t I = 0; I < (std::uint64_t{1} << n); ++I)
        if (mp.is_answer_set(I)) found.push_back(Interpretation::from_mask(n, I));
    return make_report(n, std::move(found));
}

bool is_antichain(const AnswerSetReport& r) {
    for (std::size_t i = 0; i < r.answer_sets.size(); ++i)
        for (std::size_t j = 0; j < r.answer_sets.size(); ++j)
            if (i != j && r.answer_sets[i].subset_of(r.answer_sets[j])) return false;
    return true;
}

bool is_parity_report(const AnswerSetReport& r, std::size_t n) {
    return r.n == n && r.answer_sets == odd_strings(n);
}

bool represents_parity(const Program& p, std::size_t n, const EnumerationCaps& caps) {
    if (p.signature_size() != n) return false;
    return is_parity_report(answer_sets(p, caps), n);
}

} // namespace lpsucc

#include "lpsucc/formalisms.hpp"

#include "formula_syntax.hpp"
#include "lpsucc/completion.hpp"
#include "lpsucc/errors.hpp"
#include "syntax.hpp"

#include <algorithm>
#include <sstream>

namespace lpsucc {

using detail::NameResolver;
using detail::Tok;
using detail::Token;
using detail::TokenStream;

namespace {

template <class Accept>
AnswerSetReport enumerate(std::size_t n, const EnumerationCaps& caps, Accept accept) {
    require_enumerable(n, caps);
    std::vector<Interpretation> found;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto I = Interpretation::from_mask(n, m);
        if (accept(I)) found.push_back(std::move(I));
    }
    return make_report(n, std::move(found));
}

std::string var_name(Var x) { return "x" + std::to_string(x); }

std::string render_literal(const Literal& l) { return (l.positive ? "" : "-") + var_name(l.atom); }

std::string render_head(const LiteralHead& h) { return h ? render_literal(*h) : "#false"; }

Literal parse_literal(TokenStream& ts, const NameResolver& names) {
    bool positive = !ts.accept(Tok::Minus);
    return {names.resolve(ts.expect(Tok::Ident, "literal")), positive};
}

LiteralHead parse_literal_head(TokenStream& ts, const NameResolver& names) {
    if (ts.at_word("#false")) {
        ts.next();
        return std::nullopt;
    }
    if (ts.at_word("#true")) ts.fail("#true cannot be a rule head");
    return parse_literal(ts, names);
}

void check_signature(const LiteralHead& h, std::size_t n) {
    if (h && (h->atom == 0 || h->atom > n)) throw PreconditionError("literal outside signature");
}

} // namespace

// ---------------------------------------------------------------------------
// CC

CardinalityConstraint::CardinalityConstraint(std::size_t lo, std::size_t hi, std::vector<RuleElement> elems)
    : lower(lo), upper(hi), elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& e : elements)
        if (e.kind != ElementKind::Atom && e.kind != ElementKind::Not)
            throw PreconditionError("cardinality constraint elements must be atoms or `not` atoms");
    if (lower > upper || upper > elements.size())
        throw PreconditionError("malformed bounds: need 0 <= " + std::to_string(lower) + " <= " +
                                std::to_string(upper) + " <= " + std::to_string(elements.size()));
}

std::size_t CardinalityConstraint::satisfied_count(const Interpretation& I) const {
    return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const RuleElement& e) {
        return e.kind == ElementKind::Atom ? I.contains(e.atom) : !I.contains(e.atom);
    }));
}

bool cc_satisfies(const Interpretation& I, const CardinalityConstraint& c) {
    auto k = c.satisfied_count(I);
    return c.lower <= k && k <= c.upper;
}

std::size_t CCProgram::constraint_count() const {
    std::size_t k = 0;
    for (const auto& r : rules) k += r.constraints.size();
    return k;
}

bool cc_is_answer_set(const CCProgram& p, const Interpretation& I) {
    const std::size_t n = p.signature_size;
    if (I.size() != n) return false;

    // Reduct w.r.t. I: rules blocked by a `not` literal or an exceeded upper
    // bound disappear; each remaining constraint keeps only its positive part
    // with the lower bound reduced by the `not` elements that I satisfies.
    struct Reduced {
        const CCRule* rule;
        std::vector<std::size_t> lowers;
    };
    std::vector<Reduced> active;
    for (const auto& r : p.rules) {
        bool blocked = std::any_of(r.literals.begin(), r.literals.end(), [&](const RuleElement& e) {
            return e.kind == ElementKind::Not && I.contains(e.atom);
        });
        Reduced red{&r, {}};
        for (const auto& c : r.constraints) {
            if (blocked) break;
            if (c.satisfied_count(I) > c.upper) {
                blocked = true;
                break;
            }
            std::size_t neg_sat = std::count_if(c.elements.begin(), c.elements.end(), [&](const RuleElement& e) {
                return e.kind == ElementKind::Not && !I.contains(e.atom);
            });
            red.lowers.push_back(c.lower > neg_sat ? c.lower - neg_sat : 0);
        }
        if (!blocked) active.push_back(std::move(red));
    }

    Interpretation model(n);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& red : active) {
            const CCRule& r = *red.rule;
            bool fires = std::all_of(r.literals.begin(), r.literals.end(), [&](const RuleElement& e) {
                return e.kind != ElementKind::Atom || model.contains(e.atom);
            });
            for (std::size_t i = 0; fires && i < r.constraints.size(); ++i) {
                std::size_t pos = std::count_if(r.constraints[i].elements.begin(), r.constraints[i].elements.end(),
                                                [&](const RuleElement& e) {
                                                    return e.kind == ElementKind::Atom && model.contains(e.atom);
                                                });
                fires = pos >= red.lowers[i];
            }
            if (!fires) continue;
            switch (r.kind) {
                case CCRule::HeadKind::Bottom: return false;
                case CCRule::HeadKind::Atom:
                    if (!model.contains(r.atom)) {
                        model.set(r.atom);
                        changed = true;
                    }
                    break;
                case CCRule::HeadKind::Choice:
                    for (Var a : r.choice) {
                        if (I.contains(a) && !model.contains(a)) {
                            model.set(a);
                            changed = true;
                        }
                    }
                    break;
            }
        }
    }
    return model == I;
}

AnswerSetReport cc_answer_sets(const CCProgram& p, const EnumerationCaps& caps) {
    return enumerate(p.signature_size, caps, [&](const Interpretation& I) { return cc_is_answer_set(p, I); });
}

namespace {

RuleElement parse_cc_literal(TokenStream& ts, const NameResolver& names) {
    bool negated = false;
    if (ts.at_word("not")) {
        ts.next();
        negated = true;
        if (ts.at_word("not")) ts.fail("`not not` is not part of CC programs");
    }
    Var x = names.resolve(ts.expect(Tok::Ident, "atom"));
    return negated ? RuleElement::neg(x) : RuleElement::pos(x);
}

} // namespace

CCProgram parse_cc(std::string_view text) {
    auto toks = detail::tokenize(text);
    NameResolver names(toks);
    TokenStream ts(std::move(toks));
    CCProgram prog{names.signature_size(), {}};
    while (!ts.at(Tok::End)) {
        if (detail::skip_header(ts)) continue;
        CCRule rule;
        if (ts.accept(Tok::LBrace)) {
            rule.kind = CCRule::HeadKind::Choice;
            if (!ts.at(Tok::RBrace)) {
                rule.choice.push_back(names.resolve(ts.expect(Tok::Ident, "atom")));
                while (ts.accept(Tok::Semi)) rule.choice.push_back(names.resolve(ts.expect(Tok::Ident, "atom")));
            }
            ts.expect(Tok::RBrace, "'}'");
            std::sort(rule.choice.begin(), rule.choice.end());
            rule.choice.erase(std::unique(rule.choice.begin(), rule.choice.end()), rule.choice.end());
        } else if (ts.at_word("#false")) {
            ts.next();
            rule.kind = CCRule::HeadKind::Bottom;
        } else {
            rule.kind = CCRule::HeadKind::Atom;
            rule.atom = names.resolve(ts.expect(Tok::Ident, "rule head"));
        }
        if (ts.accept(Tok::If) && !ts.at(Tok::Dot)) {
            do {
                if (ts.at(Tok::Number)) {
                    const Token& lo = ts.next();
                    ts.expect(Tok::LBrace, "'{'");
                    std::vector<RuleElement> elems;
                    if (!ts.at(Tok::RBrace)) {
                        elems.push_back(parse_cc_literal(ts, names));
                        while (ts.accept(Tok::Semi)) elems.push_back(parse_cc_literal(ts, names));
                    }
                    ts.expect(Tok::RBrace, "'}'");
                    const Token& hi = ts.expect(Tok::Number, "upper bound");
                    try {
                        rule.constraints.emplace_back(std::stoul(lo.text), std::stoul(hi.text), std::move(elems));
                    } catch (const PreconditionError& e) {
                        TokenStream::fail_at(lo, e.what());
                    }
                } else {
                    rule.literals.push_back(parse_cc_literal(ts, names));
                }
            } while (ts.accept(Tok::Comma));
        }
        ts.expect(Tok::Dot, "'.' at end of rule");
        std::sort(rule.literals.begin(), rule.literals.end());
        rule.literals.erase(std::unique(rule.literals.begin(), rule.literals.end()), rule.literals.end());
        prog.rules.push_back(std::move(rule));
    }
    return prog;
}

std::string render_cc(const CCProgram& p) {
    std::ostringstream os;
    os << "#vars " << p.signature_size << ".\n";
    auto join_elems = [](const std::vector<RuleElement>& es) {
        std::string s;
        for (std::size_t i = 0; i < es.size(); ++i) s += (i ? "; " : "") + render_element(es[i]);
        return s;
    };
    for (const auto& r : p.rules) {
        switch (r.kind) {
            case CCRule::HeadKind::Bottom: os << "#false"; break;
            case CCRule::HeadKind::Atom: os << var_name(r.atom); break;
            case CCRule::HeadKind::Choice: {
                os << '{';
                for (std::size_t i = 0; i < r.choice.size(); ++i) os << (i ? "; " : "") << var_name(r.choice[i]);
                os << '}';
                break;
            }
        }
        std::vector<std::string> items;
        for (const auto& l : r.literals) items.push_back(render_element(l));
        for (const auto& c : r.constraints)
            items.push_back(std::to_string(c.lower) + " {" + join_elems(c.elements) + "} " + std::to_string(c.upper));
        if (!items.empty()) {
            os << " :- ";
            for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
        }
        os << ".\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Literal sets

bool LiteralSet::insert(const LiteralHead& h) {
    if (!h) {
        bool changed = !bottom_;
        bottom_ = true;
        return changed;
    }
    auto& side = h->positive ? pos_ : neg_;
    if (side.at(h->atom)) return false;
    side[h->atom] = true;
    return true;
}

bool LiteralSet::consistent() const {
    if (bottom_) return false;
    for (std::size_t i = 1; i < pos_.size(); ++i)
        if (pos_[i] && neg_[i]) return false;
    return true;
}

bool LiteralSet::complete() const {
    for (std::size_t i = 1; i < pos_.size(); ++i)
        if (!pos_[i] && !neg_[i]) return false;
    return true;
}

bool LiteralSet::satisfied_by(const Interpretation& I) const {
    if (bottom_) return false;
    for (std::size_t i = 1; i < pos_.size(); ++i) {
        if (pos_[i] && !I.contains(static_cast<Var>(i))) return false;
        if (neg_[i] && I.contains(static_cast<Var>(i))) return false;
    }
    return true;
}

Interpretation LiteralSet::as_interpretation() const {
    Interpretation I(pos_.size() - 1);
    for (std::size_t i = 1; i < pos_.size(); ++i)
        if (pos_[i]) I.set(static_cast<Var>(i));
    return I;
}

// ---------------------------------------------------------------------------
// DT

namespace {
bool is_literal_conjunction(const Formula& f) {
    if (f.kind() == FormulaKind::True || f.is_literal()) return true;
    if (f.kind() != FormulaKind::And) return false;
    auto kids = f.children();
    return std::all_of(kids.begin(), kids.end(), [](const Formula& k) { return k.is_literal(); });
}
} // namespace

bool CausalTheory::is_simple() const {
    return std::all_of(rules.begin(), rules.end(), [](const CausalRule& r) { return is_literal_conjunction(r.body); });
}

std::size_t CausalTheory::size() const {
    if (is_simple()) return rules.size();
    std::size_t k = 0;
    for (const auto& r : rules) {
        k += formula_metrics(r.body).size;
        if (r.head && !r.head->positive) ++k;
    }
    return k;
}

LiteralSet dt_reduct(const CausalTheory& d, const Interpretation& I) {
    LiteralSet s(d.signature_size);
    for (const auto& r : d.rules)
        if (evaluate(r.body, I)) s.insert(r.head);
    return s;
}

bool dt_is_model(const CausalTheory& d, const Interpretation& I) {
    auto s = dt_reduct(d, I);
    return s.consistent() && s.complete() && s.satisfied_by(I);
}

AnswerSetReport dt_models(const CausalTheory& d, const EnumerationCaps& caps) {
    return enumerate(d.signature_size, caps, [&](const Interpretation& I) { return dt_is_model(d, I); });
}

CausalTheory parse_dt(std::string_view text) {
    auto toks = detail::tokenize(text);
    NameResolver names(toks);
    TokenStream ts(std::move(toks));
    CausalTheory d{names.signature_size(), {}};
    while (!ts.at(Tok::End)) {
        if (detail::skip_header(ts)) continue;
        CausalRule r{parse_literal_head(ts, names), Formula::top()};
        ts.expect(Tok::CausedBy, "'<='");
        r.body = detail::parse_formula_expr(ts, names);
        ts.expect(Tok::Dot, "'.' at end of rule");
        d.rules.push_back(std::move(r));
    }
    return d;
}

std::string render_dt(const CausalTheory& d) {
    std::ostringstream os;
    os << "#vars " << d.signature_size << ".\n";
    for (const auto& r : d.rules) os << render_head(r.head) << " <= " << render_formula(r.body) << ".\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// TV

std::vector<LiteralRule> tv_reduct(const TVProgram& p, const Interpretation& I) {
    std::vector<LiteralRule> out;
    for (const auto& r : p.rules)
        if (evaluate(r.guard, I)) out.push_back({r.head, r.body});
    return out;
}

LiteralSet tv_closure(std::span<const LiteralRule> rules, std::size_t n) {
    LiteralSet J(n);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : rules) {
            bool fires = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) { return J.contains(l); });
            if (fires && J.insert(r.head)) changed = true;
        }
    }
    return J;
}

bool tv_is_model(const TVProgram& p, const Interpretation& I) {
    auto red = tv_reduct(p, I);
    auto J = tv_closure(red, p.signature_size);
    return J.consistent() && J.complete() && J.satisfied_by(I);
}

AnswerSetReport tv_models(const TVProgram& p, const EnumerationCaps& caps) {
    return enumerate(p.signature_size, caps, [&](const Interpretation& I) { return tv_is_model(p, I); });
}

TVProgram parse_tv(std::string_view text) {
    auto toks = detail::tokenize(text);
    NameResolver names(toks);
    TokenStream ts(std::move(toks));
    TVProgram p{names.signature_size(), {}};
    while (!ts.at(Tok::End)) {
        if (detail::skip_header(ts)) continue;
        TVRule r{parse_literal_head(ts, names), {}, Formula::top()};
        ts.expect(Tok::If, "':-'");
        if (!ts.at(Tok::Colon)) {
            r.body.push_back(parse_literal(ts, names));
            while (ts.accept(Tok::Comma)) r.body.push_back(parse_literal(ts, names));
        }
        ts.expect(Tok::Colon, "':' before the guard formula");
        r.guard = detail::parse_formula_expr(ts, names);
        ts.expect(Tok::Dot, "'.' at end of rule");
        std::sort(r.body.begin(), r.body.end());
        r.body.erase(std::unique(r.body.begin(), r.body.end()), r.body.end());
        p.rules.push_back(std::move(r));
    }
    return p;
}

std::string render_tv(const TVProgram& p) {
    std::ostringstream os;
    os << "#vars " << p.signature_size << ".\n";
    for (const auto& r : p.rules) {
        os << render_head(r.head) << " :- ";
        for (std::size_t i = 0; i < r.body.size(); ++i) os << (i ? ", " : "") << render_literal(r.body[i]);
        os << (r.body.empty() ? ": " : " : ") << render_formula(r.guard) << ".\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Translations

TVProgram dt_to_tv(const CausalTheory& d) {
    TVProgram p{d.signature_size, {}};
    for (const auto& r : d.rules) {
        check_signature(r.head, d.signature_size);
        p.rules.push_back({r.head, {}, r.body});
    }
    return p;
}

TVProgram cp_to_tv(const Program& prog) {
    TVProgram p{prog.signature_size(), {}};
    for (const auto& r : prog.rules()) {
        TVRule t;
        if (!r.head.is_bottom()) t.head = Literal{r.head.atom, true};
        std::vector<Formula> guard;
        for (const auto& e : r.body) {
            switch (e.kind) {
                case ElementKind::Top: break;
                case ElementKind::Bot: guard.push_back(Formula::bottom()); break;
                case ElementKind::Atom: t.body.push_back({e.atom, true}); break;
                case ElementKind::Not: guard.push_back(negate(Formula::var(e.atom))); break;
                case ElementKind::NotNot: guard.push_back(Formula::var(e.atom)); break;
            }
        }
        t.guard = conjoin(std::move(guard));
        p.rules.push_back(std::move(t));
    }
    for (Var x = 1; x <= prog.signature_size(); ++x)
        p.rules.push_back({Literal{x, false}, {}, negate(Formula::var(x))});
    return p;
}

TVProgram pf_to_tv(const Formula& phi, std::size_t n) {
    if (n == 0) throw PreconditionError("pf_to_tv needs at least one variable for the ⊥ shorthand");
    if (max_var(phi) > n) throw PreconditionError("formula mentions a variable outside x1..xn");
    TVProgram p{n, {}};
    for (Var x = 1; x <= n; ++x) {
        p.rules.push_back({Literal{x, true}, {}, Formula::var(x)});
        p.rules.push_back({Literal{x, false}, {}, negate(Formula::var(x))});
    }
    Formula violated = negate(phi);
    p.rules.push_back({Literal{1, true}, {}, violated});
    p.rules.push_back({Literal{1, false}, {}, violated});
    return p;
}

} // namespace lpsucc

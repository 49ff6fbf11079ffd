#include "lpsucc/formula.hpp"

#include "formula_syntax.hpp"
#include "lpsucc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lpsucc {

struct Formula::Node {
    FormulaKind kind;
    Var atom;
    std::vector<Formula> kids;
};

namespace {
const std::shared_ptr<const Formula::Node>& shared_top() {
    static const auto node = std::make_shared<const Formula::Node>(Formula::Node{FormulaKind::True, 0, {}});
    return node;
}
} // namespace

Formula::Formula() : node_(shared_top()) {}

Formula Formula::make(FormulaKind k, Var x, std::vector<Formula> kids) {
    return Formula(std::make_shared<const Node>(Node{k, x, std::move(kids)}));
}

Formula Formula::var(Var x) {
    if (x == 0) throw PreconditionError("variable index must be positive");
    return make(FormulaKind::Var, x, {});
}
Formula Formula::top() { return Formula(); }
Formula Formula::bottom() { return make(FormulaKind::False, 0, {}); }

FormulaKind Formula::kind() const { return node_->kind; }
Var Formula::atom() const { return node_->atom; }
std::span<const Formula> Formula::children() const { return node_->kids; }

bool Formula::is_literal() const {
    return kind() == FormulaKind::Var ||
           (kind() == FormulaKind::Not && children()[0].kind() == FormulaKind::Var);
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.atom() != b.atom()) return false;
    auto ka = a.children(), kb = b.children();
    return std::equal(ka.begin(), ka.end(), kb.begin(), kb.end());
}

Formula negate(Formula f) { return Formula::make(FormulaKind::Not, 0, {std::move(f)}); }

Formula conjoin(std::vector<Formula> fs) {
    if (fs.empty()) return Formula::top();
    if (fs.size() == 1) return std::move(fs.front());
    return Formula::make(FormulaKind::And, 0, std::move(fs));
}

Formula disjoin(std::vector<Formula> fs) {
    if (fs.empty()) return Formula::bottom();
    if (fs.size() == 1) return std::move(fs.front());
    return Formula::make(FormulaKind::Or, 0, std::move(fs));
}

Formula implies(Formula a, Formula b) {
    return Formula::make(FormulaKind::Implies, 0, {std::move(a), std::move(b)});
}

Formula equiv(Formula a, Formula b) {
    return Formula::make(FormulaKind::Equiv, 0, {std::move(a), std::move(b)});
}

bool evaluate(const Formula& f, std::uint64_t I) {
    auto kids = f.children();
    switch (f.kind()) {
        case FormulaKind::Var: return (I >> (f.atom() - 1)) & 1u;
        case FormulaKind::True: return true;
        case FormulaKind::False: return false;
        case FormulaKind::Not: return !evaluate(kids[0], I);
        case FormulaKind::And:
            return std::all_of(kids.begin(), kids.end(), [I](const Formula& k) { return evaluate(k, I); });
        case FormulaKind::Or:
            return std::any_of(kids.begin(), kids.end(), [I](const Formula& k) { return evaluate(k, I); });
        case FormulaKind::Implies: return !evaluate(kids[0], I) || evaluate(kids[1], I);
        case FormulaKind::Equiv: return evaluate(kids[0], I) == evaluate(kids[1], I);
    }
    return false;
}

bool evaluate(const Formula& f, const Interpretation& I) {
    auto kids = f.children();
    switch (f.kind()) {
        case FormulaKind::Var: return I.contains(f.atom());
        case FormulaKind::True: return true;
        case FormulaKind::False: return false;
        case FormulaKind::Not: return !evaluate(kids[0], I);
        case FormulaKind::And:
            return std::all_of(kids.begin(), kids.end(), [&](const Formula& k) { return evaluate(k, I); });
        case FormulaKind::Or:
            return std::any_of(kids.begin(), kids.end(), [&](const Formula& k) { return evaluate(k, I); });
        case FormulaKind::Implies: return !evaluate(kids[0], I) || evaluate(kids[1], I);
        case FormulaKind::Equiv: return evaluate(kids[0], I) == evaluate(kids[1], I);
    }
    return false;
}

FormulaMetrics formula_metrics(const Formula& f) {
    FormulaMetrics m;
    auto kids = f.children();
    std::size_t child_depth = 0;
    for (const auto& k : kids) {
        auto km = formula_metrics(k);
        m.size += km.size;
        child_depth = std::max(child_depth, km.depth);
    }
    switch (f.kind()) {
        case FormulaKind::Var:
        case FormulaKind::True:
        case FormulaKind::False: break;
        case FormulaKind::Not:
            m.size += 1;
            m.depth = child_depth;
            break;
        case FormulaKind::And:
        case FormulaKind::Or:
            m.size += kids.size() - 1;
            m.depth = child_depth + 1;
            break;
        case FormulaKind::Implies:
        case FormulaKind::Equiv:
            m.size += 1;
            m.depth = child_depth + 1;
            break;
    }
    return m;
}

FormulaMetrics formula_metrics(std::span<const Formula> fs) {
    return formula_metrics(conjoin(std::vector<Formula>(fs.begin(), fs.end())));
}

Var max_var(const Formula& f) {
    Var m = f.kind() == FormulaKind::Var ? f.atom() : 0;
    for (const auto& k : f.children()) m = std::max(m, max_var(k));
    return m;
}

std::vector<Interpretation> models(std::span<const Formula> fs, std::size_t n,
                                   const EnumerationCaps& caps) {
    require_enumerable(n, caps);
    for (const auto& f : fs)
        if (max_var(f) > n) throw PreconditionError("formula mentions a variable outside x1..xn");
    std::vector<Interpretation> out;
    for (std::uint64_t I = 0; I < (std::uint64_t{1} << n); ++I) {
        if (std::all_of(fs.begin(), fs.end(), [I](const Formula& f) { return evaluate(f, I); }))
            out.push_back(Interpretation::from_mask(n, I));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
    return out;
}

std::vector<Interpretation> models(const Formula& f, std::size_t n, const EnumerationCaps& caps) {
    return models(std::span<const Formula>(&f, 1), n, caps);
}

// ---------------------------------------------------------------------------
// Text

namespace {

int precedence(FormulaKind k) {
    switch (k) {
        case FormulaKind::Equiv: return 1;
        case FormulaKind::Implies: return 2;
        case FormulaKind::Or: return 3;
        case FormulaKind::And: return 4;
        case FormulaKind::Not: return 5;
        default: return 6;
    }
}

void render(const Formula& f, std::ostream& os, int min_prec) {
    int p = precedence(f.kind());
    bool paren = p < min_prec;
    if (paren) os << '(';
    auto kids = f.children();
    switch (f.kind()) {
        case FormulaKind::Var: os << 'x' << f.atom(); break;
        case FormulaKind::True: os << "#true"; break;
        case FormulaKind::False: os << "#false"; break;
        case FormulaKind::Not:
            os << '!';
            render(kids[0], os, 5);
            break;
        case FormulaKind::And:
        case FormulaKind::Or: {
            const char* op = f.kind() == FormulaKind::And ? " & " : " | ";
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) os << op;
                render(kids[i], os, p + 1);
            }
            break;
        }
        case FormulaKind::Implies:
            render(kids[0], os, 3);
            os << " -> ";
            render(kids[1], os, 2);
            break;
        case FormulaKind::Equiv:
            render(kids[0], os, 2);
            os << " <-> ";
            render(kids[1], os, 2);
            break;
    }
    if (paren) os << ')';
}

using detail::NameResolver;
using detail::Tok;
using detail::TokenStream;

Formula parse_equiv(TokenStream& ts, const NameResolver& names);

Formula parse_unary(TokenStream& ts, const NameResolver& names) {
    if (ts.accept(Tok::Bang) || ts.accept(Tok::Minus)) return negate(parse_unary(ts, names));
    if (ts.accept(Tok::LParen)) {
        Formula f = parse_equiv(ts, names);
        ts.expect(Tok::RParen, "')'");
        return f;
    }
    if (ts.at_word("#true")) {
        ts.next();
        return Formula::top();
    }
    if (ts.at_word("#false")) {
        ts.next();
        return Formula::bottom();
    }
    if (ts.at_word("not")) ts.fail("use '!' or '-' for negation in formulas");
    return Formula::var(names.resolve(ts.expect(Tok::Ident, "formula")));
}

Formula parse_nary(TokenStream& ts, const NameResolver& names, Tok op,
                   Formula (*sub)(TokenStream&, const NameResolver&), Formula (*join)(std::vector<Formula>)) {
    std::vector<Formula> parts{sub(ts, names)};
    while (ts.accept(op)) parts.push_back(sub(ts, names));
    return join(std::move(parts));
}

Formula parse_and(TokenStream& ts, const NameResolver& names) {
    return parse_nary(ts, names, Tok::And, parse_unary, [](std::vector<Formula> v) { return conjoin(std::move(v)); });
}

Formula parse_or(TokenStream& ts, const NameResolver& names) {
    return parse_nary(ts, names, Tok::Or, parse_and, [](std::vector<Formula> v) { return disjoin(std::move(v)); });
}

Formula parse_implies(TokenStream& ts, const NameResolver& names) {
    Formula lhs = parse_or(ts, names);
    if (ts.accept(Tok::Implies)) return implies(std::move(lhs), parse_implies(ts, names));
    return lhs;
}

Formula parse_equiv(TokenStream& ts, const NameResolver& names) {
    Formula lhs = parse_implies(ts, names);
    if (ts.accept(Tok::Equiv)) {
        Formula rhs = parse_implies(ts, names);
        if (ts.at(Tok::Equiv)) ts.fail("'<->' is not associative; add parentheses");
        return equiv(std::move(lhs), std::move(rhs));
    }
    return lhs;
}

} // namespace

namespace detail {
Formula parse_formula_expr(TokenStream& ts, const NameResolver& names) { return parse_equiv(ts, names); }
} // namespace detail

std::string render_formula(const Formula& f) {
    std::ostringstream os;
    render(f, os, 0);
    return os.str();
}

ParsedFormulaSet parse_formula_set(std::string_view text) {
    auto toks = detail::tokenize(text);
    NameResolver names(toks);
    TokenStream ts(std::move(toks));
    ParsedFormulaSet out;
    out.signature_size = names.signature_size();
    while (!ts.at(Tok::End)) {
        if (detail::skip_header(ts)) continue;
        out.formulas.push_back(parse_equiv(ts, names));
        if (!ts.at(Tok::End)) ts.expect(Tok::Dot, "'.' after formula");
    }
    return out;
}

ParsedFormula parse_formula(std::string_view text) {
    auto set = parse_formula_set(text);
    if (set.formulas.size() != 1)
        throw ParseError("expected exactly one formula, found " + std::to_string(set.formulas.size()), 1, 1);
    return {set.formulas.front(), set.signature_size};
}

// ---------------------------------------------------------------------------
// CNF

namespace {
bool is_clause(const Formula& f) {
    if (f.is_literal()) return true;
    if (f.kind() != FormulaKind::Or) return false;
    auto kids = f.children();
    return std::all_of(kids.begin(), kids.end(), [](const Formula& k) { return k.is_literal(); });
}

void append_literal(const Formula& lit, std::ostream& os) {
    if (lit.kind() == FormulaKind::Var)
        os << lit.atom() << ' ';
    else
        os << '-' << lit.children()[0].atom() << ' ';
}

void collect_clauses(const Formula& f, std::vector<std::string>& out) {
    if (f.kind() == FormulaKind::True) return;
    if (f.kind() == FormulaKind::False) {
        out.push_back("0");
        return;
    }
    if (f.kind() == FormulaKind::And) {
        for (const auto& k : f.children()) collect_clauses(k, out);
        return;
    }
    std::ostringstream os;
    if (f.is_literal())
        append_literal(f, os);
    else
        for (const auto& k : f.children()) append_literal(k, os);
    os << '0';
    out.push_back(os.str());
}
} // namespace

bool is_cnf(const Formula& f) {
    if (f.kind() == FormulaKind::True || f.kind() == FormulaKind::False) return true;
    if (is_clause(f)) return true;
    if (f.kind() != FormulaKind::And) return false;
    auto kids = f.children();
    return std::all_of(kids.begin(), kids.end(), [](const Formula& k) { return is_clause(k); });
}

std::string to_dimacs(std::span<const Formula> fs, std::size_t n) {
    std::vector<std::string> clauses;
    for (const auto& f : fs) {
        if (!is_cnf(f))
            throw PreconditionError("formula is not in CNF: " + render_formula(f) +
                                    " (no auxiliary-variable translation is performed)");
        collect_clauses(f, clauses);
    }
    std::ostringstream os;
    os << "p cnf " << n << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) os << c << '\n';
    return os.str();
}

} // namespace lpsucc

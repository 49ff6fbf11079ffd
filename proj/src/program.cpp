#include "lpsucc/program.hpp"

#include "lpsucc/caps.hpp"
#include "lpsucc/errors.hpp"
#include "syntax.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lpsucc {

EnumerationCaps EnumerationCaps::from_env() {
    auto read = [](const char* name, std::size_t fallback) -> std::size_t {
        const char* v = std::getenv(name);
        if (!v || !*v) return fallback;
        char* end = nullptr;
        unsigned long long x = std::strtoull(v, &end, 10);
        if (*end != '\0' || x == 0 || *v == '-')
            throw PreconditionError(std::string(name) + " must be a positive integer, got '" + v + "'");
        return static_cast<std::size_t>(x);
    };
    EnumerationCaps caps;
    caps.max_vars = read("LPSUCC_MAX_VARS", caps.max_vars);
    caps.max_loops = read("LPSUCC_MAX_LOOPS", caps.max_loops);
    return caps;
}

void require_enumerable(std::size_t n, const EnumerationCaps& caps) {
    std::size_t limit = std::min(caps.max_vars, kHardMaxVars);
    if (n > limit)
        throw CapExceeded("signature of " + std::to_string(n) +
                          " variables exceeds enumeration cap " + std::to_string(limit));
}

// ---------------------------------------------------------------------------
// Body / Program

Body::Body(std::vector<RuleElement> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool Body::contains(RuleElement e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

Program::Program(std::size_t signature_size, std::vector<Rule> rules) : n_(signature_size) {
    for (auto& r : rules) add(std::move(r));
}

bool Program::add(Rule r) {
    auto in_range = [&](Var x) { return x >= 1 && x <= n_; };
    if (!r.head.is_bottom() && !in_range(r.head.atom))
        throw PreconditionError("head atom x" + std::to_string(r.head.atom) + " outside signature");
    for (const auto& e : r.body)
        if (e.has_atom() && !in_range(e.atom))
            throw PreconditionError("body atom x" + std::to_string(e.atom) + " outside signature");
    if (!index_.insert(r).second) return false;
    rules_.push_back(std::move(r));
    return true;
}

bool Program::contains(const Rule& r) const {
    return index_.count(r) != 0;
}

bool Program::is_normal() const {
    return std::none_of(rules_.begin(), rules_.end(), [](const Rule& r) {
        return std::any_of(r.body.begin(), r.body.end(),
                           [](const RuleElement& e) { return e.kind == ElementKind::NotNot; });
    });
}

bool Program::is_basic() const {
    return std::none_of(rules_.begin(), rules_.end(), [](const Rule& r) {
        return std::any_of(r.body.begin(), r.body.end(), [](const RuleElement& e) {
            return e.kind == ElementKind::Not || e.kind == ElementKind::NotNot;
        });
    });
}

bool same_rule_set(const Program& a, const Program& b) {
    if (a.signature_size() != b.signature_size()) return false;
    auto ra = a.rules(), rb = b.rules();
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
}

// ---------------------------------------------------------------------------
// Interpretation

Interpretation Interpretation::from_string(std::string_view w) {
    Interpretation I(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '0' && w[i] != '1')
            throw PreconditionError("interpretation strings contain only 0 and 1");
        I.bits_[i] = w[i] == '1';
    }
    return I;
}

Interpretation Interpretation::from_mask(std::size_t n, std::uint64_t mask) {
    Interpretation I(n);
    for (std::size_t i = 0; i < n; ++i) I.bits_[i] = (mask >> i) & 1u;
    return I;
}

std::size_t Interpretation::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool Interpretation::subset_of(const Interpretation& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !(i < other.bits_.size() && other.bits_[i])) return false;
    return true;
}

std::uint64_t Interpretation::to_mask() const {
    if (bits_.size() > 64) throw PreconditionError("interpretation wider than 64 bits");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) m |= std::uint64_t{1} << i;
    return m;
}

std::string Interpretation::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

std::vector<Interpretation> odd_strings(std::size_t n) {
    if (n > kHardMaxVars) throw CapExceeded("odd_strings: n too large");
    std::vector<Interpretation> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (__builtin_popcountll(m) % 2 == 1) out.push_back(Interpretation::from_mask(n, m));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
    return out;
}

// ---------------------------------------------------------------------------
// Body analytics

std::vector<Var> body_vars(const Body& body) {
    std::vector<Var> out;
    for (const auto& e : body)
        if (e.kind == ElementKind::Atom) out.push_back(e.atom);
    return out;
}

bool covers(const Body& body, Var x) {
    return std::any_of(body.begin(), body.end(),
                       [x](const RuleElement& e) { return e.has_atom() && e.atom == x; });
}

bool fully_covers(const Body& body, std::size_t n) {
    std::vector<bool> seen(n + 1, false);
    std::size_t count = 0;
    for (const auto& e : body) {
        if (e.has_atom() && e.atom <= n && !seen[e.atom]) {
            seen[e.atom] = true;
            ++count;
        }
    }
    return count == n;
}

bool body_consistent(const Body& body) {
    if (body.contains(RuleElement::bottom())) return false;
    for (const auto& e : body) {
        if (e.kind != ElementKind::Not) continue;
        if (body.contains(RuleElement::pos(e.atom)) || body.contains(RuleElement::negneg(e.atom)))
            return false;
    }
    return true;
}

BodyProfile body_profile(const Body& body, std::size_t n) {
    BodyProfile p;
    // Each element constrains one variable: x and not-not x force it true,
    // not x forces it false.
    std::vector<int> forced(n + 1, -1);
    for (const auto& e : body) {
        if (!e.has_atom() || e.atom > n) continue;
        if (forced[e.atom] == -1) p.covered.push_back(e.atom);
        forced[e.atom] = e.kind == ElementKind::Not ? 0 : 1;
    }
    std::sort(p.covered.begin(), p.covered.end());
    p.consistent = body_consistent(body);
    if (!p.consistent) {
        p.sat_count = 0;
        return p;
    }
    p.sat_count = boost::multiprecision::cpp_int(1) << static_cast<unsigned>(n - p.covered.size());
    if (p.covered.size() == n) {
        Interpretation I(n);
        for (Var x = 1; x <= n; ++x)
            if (forced[x] == 1) I.set(x);
        p.unique_string = std::move(I);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Text

namespace {

using detail::NameResolver;
using detail::Tok;
using detail::Token;
using detail::TokenStream;

RuleElement parse_element(TokenStream& ts, const NameResolver& names) {
    if (ts.at_word("#true")) {
        ts.next();
        return RuleElement::top();
    }
    if (ts.at_word("#false")) {
        ts.next();
        return RuleElement::bottom();
    }
    std::size_t nots = 0;
    while (ts.at_word("not")) {
        ts.next();
        ++nots;
    }
    if (ts.at(Tok::Directive))
        ts.fail("'not' applies only to atoms");
    const Token& id = ts.expect(Tok::Ident, "rule element");
    Var x = names.resolve(id);
    if (nots == 0) return RuleElement::pos(x);
    return nots % 2 == 1 ? RuleElement::neg(x) : RuleElement::negneg(x);
}

} // namespace

Program parse_program(std::string_view text) {
    auto toks = detail::tokenize(text);
    NameResolver names(toks);
    TokenStream ts(std::move(toks));
    Program prog(names.signature_size());
    while (!ts.at(Tok::End)) {
        if (detail::skip_header(ts)) continue;
        Head head;
        if (ts.at_word("#false")) {
            ts.next();
            head = Head::bottom();
        } else if (ts.at_word("#true")) {
            ts.fail("#true cannot be a rule head");
        } else if (ts.at_word("not")) {
            ts.fail("negated element cannot be a rule head");
        } else {
            head = Head::var(names.resolve(ts.expect(Tok::Ident, "rule head")));
        }
        std::vector<RuleElement> body;
        if (ts.accept(Tok::If) && !ts.at(Tok::Dot)) {
            body.push_back(parse_element(ts, names));
            while (ts.accept(Tok::Comma)) body.push_back(parse_element(ts, names));
        }
        ts.expect(Tok::Dot, "'.' at end of rule");
        prog.add(Rule{head, Body(std::move(body))});
    }
    return prog;
}

std::string render_element(const RuleElement& e) {
    std::string x = "x" + std::to_string(e.atom);
    switch (e.kind) {
        case ElementKind::Top: return "#true";
        case ElementKind::Bot: return "#false";
        case ElementKind::Atom: return x;
        case ElementKind::Not: return "not " + x;
        case ElementKind::NotNot: return "not not " + x;
    }
    return {};
}

std::string render_rule(const Rule& r) {
    std::string s = r.head.is_bottom() ? "#false" : "x" + std::to_string(r.head.atom);
    if (!r.body.empty()) {
        s += " :- ";
        bool first = true;
        for (const auto& e : r.body) {
            if (!first) s += ", ";
            first = false;
            s += render_element(e);
        }
    }
    return s + ".";
}

std::string render_program(const Program& p) {
    std::ostringstream os;
    os << "#vars " << p.signature_size() << ".\n";
    for (const auto& r : p.rules()) os << render_rule(r) << '\n';
    return os.str();
}

} // namespace lpsucc

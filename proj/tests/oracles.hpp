#pragma once

// Brute-force reference implementations. They share no code paths with the
// library beyond the data types, so agreement is evidence rather than echo.

#include "lpsucc/formalisms.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/program.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using lpsucc::Body;
using lpsucc::ElementKind;
using lpsucc::Formula;
using lpsucc::FormulaKind;
using lpsucc::Program;
using lpsucc::Var;
using Mask = std::uint64_t;

inline bool has(Mask I, Var x) { return (I >> (x - 1)) & 1; }

inline std::string bits(Mask I, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((I >> i) & 1) s[i] = '1';
    return s;
}

inline bool sat(Mask I, const lpsucc::RuleElement& e) {
    switch (e.kind) {
        case ElementKind::Top: return true;
        case ElementKind::Bot: return false;
        case ElementKind::Atom:
        case ElementKind::NotNot: return has(I, e.atom);
        case ElementKind::Not: return !has(I, e.atom);
    }
    return false;
}

inline bool sat(Mask I, const Body& b) {
    for (const auto& e : b)
        if (!sat(I, e)) return false;
    return true;
}

/// Number of interpretations over n variables satisfying b.
inline std::uint64_t body_count(const Body& b, std::size_t n) {
    std::uint64_t k = 0;
    for (Mask I = 0; I < (Mask{1} << n); ++I) k += sat(I, b);
    return k;
}

/// J is closed under the reduct Π^I: negative elements judged by I, atoms by J.
inline bool reduct_closed(const Program& p, Mask I, Mask J) {
    for (const auto& r : p.rules()) {
        bool fires = true;
        for (const auto& e : r.body) {
            bool ok = e.kind == ElementKind::Atom ? has(J, e.atom) : sat(I, e);
            if (!ok) {
                fires = false;
                break;
            }
        }
        if (!fires) continue;
        if (r.head.is_bottom() || !has(J, r.head.atom)) return false;
    }
    return true;
}

/// I is an answer set iff I is closed under Π^I and no proper subset is.
inline std::set<std::string> answer_sets(const Program& p) {
    const std::size_t n = p.signature_size();
    std::set<std::string> out;
    for (Mask I = 0; I < (Mask{1} << n); ++I) {
        if (!reduct_closed(p, I, I)) continue;
        bool minimal = true;
        for (Mask J = (I - 1) & I; minimal && J != I; J = (J - 1) & I) {
            if (reduct_closed(p, I, J)) minimal = false;
            if (J == 0) break;
        }
        if (minimal) out.insert(bits(I, n));
    }
    return out;
}

inline bool eval(const Formula& f, Mask I) {
    auto kids = f.children();
    switch (f.kind()) {
        case FormulaKind::Var: return has(I, f.atom());
        case FormulaKind::True: return true;
        case FormulaKind::False: return false;
        case FormulaKind::Not: return !eval(kids[0], I);
        case FormulaKind::And:
            for (const auto& k : kids)
                if (!eval(k, I)) return false;
            return true;
        case FormulaKind::Or:
            for (const auto& k : kids)
                if (eval(k, I)) return true;
            return false;
        case FormulaKind::Implies: return !eval(kids[0], I) || eval(kids[1], I);
        case FormulaKind::Equiv: return eval(kids[0], I) == eval(kids[1], I);
    }
    return false;
}

inline std::set<std::string> models(const std::vector<Formula>& fs, std::size_t n) {
    std::set<std::string> out;
    for (Mask I = 0; I < (Mask{1} << n); ++I) {
        bool ok = true;
        for (const auto& f : fs) ok = ok && eval(f, I);
        if (ok) out.insert(bits(I, n));
    }
    return out;
}

/// Models of the completion read directly off the rules.
inline std::set<std::string> completion_models(const Program& p) {
    const std::size_t n = p.signature_size();
    std::set<std::string> out;
    for (Mask I = 0; I < (Mask{1} << n); ++I) {
        bool ok = true;
        std::vector<bool> supported(n + 1, false);
        for (const auto& r : p.rules()) {
            if (!sat(I, r.body)) continue;
            if (r.head.is_bottom()) ok = false;
            else supported[r.head.atom] = true;
        }
        for (Var x = 1; ok && x <= n; ++x) ok = supported[x] == has(I, x);
        if (ok) out.insert(bits(I, n));
    }
    return out;
}

/// Every nonempty atom subset whose induced positive graph is strongly
/// connected (singletons need a self-edge), found by reachability closure.
inline std::set<std::vector<Var>> loops(const Program& p) {
    const std::size_t n = p.signature_size();
    std::vector<std::vector<bool>> edge(n + 1, std::vector<bool>(n + 1, false));
    for (const auto& r : p.rules())
        if (!r.head.is_bottom())
            for (const auto& e : r.body)
                if (e.kind == ElementKind::Atom) edge[r.head.atom][e.atom] = true;
    std::set<std::vector<Var>> out;
    for (Mask U = 1; U < (Mask{1} << n); ++U) {
        std::vector<Var> atoms;
        for (Var x = 1; x <= n; ++x)
            if (has(U, x)) atoms.push_back(x);
        if (atoms.size() == 1) {
            if (edge[atoms[0]][atoms[0]]) out.insert(atoms);
            continue;
        }
        const std::size_t k = atoms.size();
        std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) reach[i][j] = i == j || edge[atoms[i]][atoms[j]];
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (reach[i][m] && reach[m][j]) reach[i][j] = true;
        bool strong = true;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) strong = strong && reach[i][j];
        if (strong) out.insert(atoms);
    }
    return out;
}

/// Odd-weight strings of length n.
inline std::set<std::string> parity(std::size_t n) {
    std::set<std::string> out;
    for (Mask I = 0; I < (Mask{1} << n); ++I)
        if (__builtin_popcountll(I) % 2 == 1) out.insert(bits(I, n));
    return out;
}

inline bool lit_sat(Mask I, const lpsucc::Literal& l) { return has(I, l.atom) == l.positive; }

/// The literal heads (⊥ as nullopt) have exactly one model, and it is I.
inline bool unique_model_is(const std::vector<lpsucc::LiteralHead>& heads, std::size_t n, Mask I) {
    std::size_t count = 0;
    bool found = false;
    for (Mask J = 0; J < (Mask{1} << n); ++J) {
        bool ok = true;
        for (const auto& h : heads) ok = ok && h && lit_sat(J, *h);
        if (ok) {
            ++count;
            found = found || J == I;
        }
    }
    return count == 1 && found;
}

inline std::set<std::string> dt_models(const lpsucc::CausalTheory& d) {
    const std::size_t n = d.signature_size;
    std::set<std::string> out;
    for (Mask I = 0; I < (Mask{1} << n); ++I) {
        std::vector<lpsucc::LiteralHead> heads;
        for (const auto& r : d.rules)
            if (eval(r.body, I)) heads.push_back(r.head);
        if (unique_model_is(heads, n, I)) out.insert(bits(I, n));
    }
    return out;
}

inline std::set<std::string> tv_models(const lpsucc::TVProgram& p) {
    const std::size_t n = p.signature_size;
    std::set<std::string> out;
    for (Mask I = 0; I < (Mask{1} << n); ++I) {
        // Minimal closure as a growing set of heads, ⊥ kept as an entry.
        std::vector<lpsucc::LiteralHead> J;
        auto in_J = [&](const lpsucc::Literal& l) {
            for (const auto& h : J)
                if (h && *h == l) return true;
            return false;
        };
        auto has_head = [&](const lpsucc::LiteralHead& h) {
            for (const auto& g : J)
                if (g == h) return true;
            return false;
        };
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& r : p.rules) {
                if (!eval(r.guard, I) || has_head(r.head)) continue;
                bool fires = true;
                for (const auto& l : r.body) fires = fires && in_J(l);
                if (fires) {
                    J.push_back(r.head);
                    grew = true;
                }
            }
        }
        if (unique_model_is(J, n, I)) out.insert(bits(I, n));
    }
    return out;
}

/// Generate and test for CC programs whose choice rules have empty bodies:
/// I survives iff every ⊥ rule is blocked and I is the least model of the
/// non-choice rules plus facts for the chosen atoms, with `not` and the
/// constraints judged against I.
inline std::set<std::string> cc_answer_sets(const lpsucc::CCProgram& p) {
    const std::size_t n = p.signature_size;
    std::set<std::string> out;
    auto count = [](const lpsucc::CardinalityConstraint& c, Mask M) {
        std::size_t k = 0;
        for (const auto& e : c.elements) k += sat(M, e);
        return k;
    };
    for (Mask I = 0; I < (Mask{1} << n); ++I) {
        Mask M = 0;
        bool dead = false;
        for (const auto& r : p.rules)
            if (r.kind == lpsucc::CCRule::HeadKind::Choice)
                for (Var a : r.choice)
                    if (has(I, a)) M |= Mask{1} << (a - 1);
        for (bool grew = true; grew && !dead;) {
            grew = false;
            for (const auto& r : p.rules) {
                if (r.kind == lpsucc::CCRule::HeadKind::Choice) continue;
                bool fires = true;
                for (const auto& e : r.literals) fires = fires && (e.kind == ElementKind::Atom ? has(M, e.atom) : !has(I, e.atom));
                for (const auto& c : r.constraints) {
                    std::size_t k = count(c, I);
                    fires = fires && c.lower <= k && k <= c.upper;
                }
                if (!fires) continue;
                if (r.kind == lpsucc::CCRule::HeadKind::Bottom) {
                    dead = true;
                } else if (!has(M, r.atom)) {
                    M |= Mask{1} << (r.atom - 1);
                    grew = true;
                }
            }
        }
        if (!dead && M == I) out.insert(bits(I, n));
    }
    return out;
}

template <class Report>
std::set<std::string> as_set(const Report& r) {
    auto v = r.strings();
    return {v.begin(), v.end()};
}

} // namespace oracle

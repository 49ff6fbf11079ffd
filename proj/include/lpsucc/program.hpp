#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <set>
#include <vector>

namespace lpsucc {

/// Variable index; x_i has index i, starting at 1.
using Var = std::uint32_t;

/// Body element kinds in canonical order (bodies sort by kind, then atom).
enum class ElementKind : std::uint8_t { Top, Bot, Atom, Not, NotNot };

struct RuleElement {
    ElementKind kind = ElementKind::Top;
    Var atom = 0; // 0 for Top/Bot

    static constexpr RuleElement top() { return {ElementKind::Top, 0}; }
    static constexpr RuleElement bottom() { return {ElementKind::Bot, 0}; }
    static constexpr RuleElement pos(Var x) { return {ElementKind::Atom, x}; }
    static constexpr RuleElement neg(Var x) { return {ElementKind::Not, x}; }
    static constexpr RuleElement negneg(Var x) { return {ElementKind::NotNot, x}; }

    bool has_atom() const { return kind != ElementKind::Top && kind != ElementKind::Bot; }

    friend auto operator<=>(const RuleElement&, const RuleElement&) = default;
};

/// A body is a set of elements; stored sorted and duplicate-free.
class Body {
public:
    Body() = default;
    Body(std::initializer_list<RuleElement> elems) : Body(std::vector<RuleElement>(elems)) {}
    explicit Body(std::vector<RuleElement> elems);

    const std::vector<RuleElement>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(RuleElement e) const;

    friend auto operator<=>(const Body&, const Body&) = default;

private:
    std::vector<RuleElement> elems_;
};

/// Rule head: an atom or ⊥ (atom == 0).
struct Head {
    Var atom = 0;

    static constexpr Head bottom() { return {0}; }
    static constexpr Head var(Var x) { return {x}; }
    bool is_bottom() const { return atom == 0; }

    friend auto operator<=>(const Head&, const Head&) = default;
};

struct Rule {
    Head head;
    Body body;

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// A canonical program over the signature x1..xn. Rules form a set: adding a
/// rule that is already present is a no-op. Insertion order is preserved.
class Program {
public:
    Program() = default;
    explicit Program(std::size_t signature_size) : n_(signature_size) {}
    Program(std::size_t signature_size, std::vector<Rule> rules);

    std::size_t signature_size() const { return n_; }
    const std::vector<Rule>& rules() const { return rules_; }
    /// Number of rules.
    std::size_t size() const { return rules_.size(); }

    /// Returns false if the rule was already present. Throws PreconditionError
    /// when the rule mentions an atom outside the signature.
    bool add(Rule r);

    bool contains(const Rule& r) const;
    /// True if the rule set contains no `not not`.
    bool is_normal() const;
    /// True if the rule set contains no `not` and no `not not`.
    bool is_basic() const;

    friend bool operator==(const Program& a, const Program& b) { return a.n_ == b.n_ && a.rules_ == b.rules_; }

private:
    std::size_t n_ = 0;
    std::vector<Rule> rules_;
    std::set<Rule> index_;
};

/// Set equality of rules, ignoring insertion order.
bool same_rule_set(const Program& a, const Program& b);

/// Fixed-width bitstring; bit i (1-based) is membership of x_i.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t n) : bits_(n, false) {}

    /// Parses "1010" (leftmost character is x1).
    static Interpretation from_string(std::string_view w);
    /// Bit (i-1) of the mask is x_i. Requires n <= 64.
    static Interpretation from_mask(std::size_t n, std::uint64_t mask);

    std::size_t size() const { return bits_.size(); }
    bool contains(Var x) const { return x >= 1 && x <= bits_.size() && bits_[x - 1]; }
    void set(Var x, bool value = true) { bits_.at(x - 1) = value; }
    std::size_t count() const;
    /// Number of 1-bits mod 2.
    unsigned parity() const { return static_cast<unsigned>(count() % 2); }
    bool subset_of(const Interpretation& other) const;
    std::uint64_t to_mask() const;
    std::string to_string() const;

    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
    std::vector<bool> bits_;
};

/// All odd-weight strings of length n, sorted lexicographically.
std::vector<Interpretation> odd_strings(std::size_t n);

/// var(B): atoms occurring as bare elements.
std::vector<Var> body_vars(const Body& body);

bool covers(const Body& body, Var x);
/// Covers every variable of x1..n.
bool fully_covers(const Body& body, std::size_t n);

/// False iff the body contains ⊥, or x with not x, or not x with not not x.
bool body_consistent(const Body& body);

/// Symbolic description of S(B) = {I : I ⊨ B}.
struct BodyProfile {
    std::vector<Var> covered;
    bool consistent = false;
    boost::multiprecision::cpp_int sat_count;
    /// Present iff sat_count == 1.
    std::optional<Interpretation> unique_string;
};

BodyProfile body_profile(const Body& body, std::size_t n);

/// Parses the rule syntax:
///   #vars 3.
///   x3 :- not x1, not x2.
///   #false :- x1, not not x2.
///   x1.
/// `not not not x` is read as `not x`; `%` starts a comment.
Program parse_program(std::string_view text);

std::string render_element(const RuleElement& e);
std::string render_rule(const Rule& r);
/// Canonical text with a `#vars n.` header; parse_program inverts it exactly.
std::string render_program(const Program& p);

} // namespace lpsucc

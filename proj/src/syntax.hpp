#pragma once

// Tokenizer and name resolution shared by every text format.

#include "lpsucc/program.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpsucc::detail {

enum class Tok {
    Ident,
    Number,
    Directive, // #vars, #true, #false
    If,        // :-
    CausedBy,  // <=
    Implies,   // ->
    Equiv,     // <->
    Comma,
    Semi,
    Dot,
    LBrace,
    RBrace,
    LParen,
    RParen,
    And,
    Or,
    Bang,
    Minus,
    Colon,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text);

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t ahead = 0) const;
    const Token& next();
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(std::string_view w) const;
    bool accept(Tok k);
    const Token& expect(Tok k, std::string_view what);
    [[noreturn]] void fail(const std::string& msg) const;
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg);

    const std::vector<Token>& tokens() const { return toks_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

/// Maps identifiers to variable indices. A `#vars n.` header fixes the
/// signature and requires x<i> names with 1 <= i <= n; without a header, x<i>
/// names map to i, and any other identifier switches the whole text to
/// first-appearance numbering.
class NameResolver {
public:
    explicit NameResolver(const std::vector<Token>& toks);

    Var resolve(const Token& ident) const;
    std::size_t signature_size() const { return n_; }
    bool has_header() const { return header_; }

private:
    bool header_ = false;
    bool by_appearance_ = false;
    std::size_t n_ = 0;
    std::unordered_map<std::string, Var> names_;
};

/// Parses "#vars N ." at the stream position, if present. Returns true if consumed.
bool skip_header(TokenStream& ts);

/// Index of an `x<digits>` name, or 0 if the name has another shape.
Var x_index(std::string_view name);

} // namespace lpsucc::detail

#include "syntax.hpp"

#include "lpsucc/errors.hpp"

#include <cctype>
#include <charconv>

namespace lpsucc {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace detail {

namespace {
bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(text.substr(i, len)), line, col});
        advance(len);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        auto rest = text.substr(i);
        if (ident_start(c)) {
            std::size_t len = 1;
            while (len < rest.size() && ident_char(rest[len])) ++len;
            push(Tok::Ident, len);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (len < rest.size() && std::isdigit(static_cast<unsigned char>(rest[len]))) ++len;
            push(Tok::Number, len);
        } else if (c == '#') {
            std::size_t len = 1;
            while (len < rest.size() && std::isalpha(static_cast<unsigned char>(rest[len]))) ++len;
            if (len == 1) throw ParseError("expected directive name after '#'", line, col);
            push(Tok::Directive, len);
        } else if (rest.starts_with(":-")) {
            push(Tok::If, 2);
        } else if (rest.starts_with("<->")) {
            push(Tok::Equiv, 3);
        } else if (rest.starts_with("<=")) {
            push(Tok::CausedBy, 2);
        } else if (rest.starts_with("->")) {
            push(Tok::Implies, 2);
        } else {
            Tok k;
            switch (c) {
                case ',': k = Tok::Comma; break;
                case ';': k = Tok::Semi; break;
                case '.': k = Tok::Dot; break;
                case '{': k = Tok::LBrace; break;
                case '}': k = Tok::RBrace; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '&': k = Tok::And; break;
                case '|': k = Tok::Or; break;
                case '!': k = Tok::Bang; break;
                case '-': k = Tok::Minus; break;
                case ':': k = Tok::Colon; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
            push(k, 1);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
    std::size_t p = pos_ + ahead;
    return p < toks_.size() ? toks_[p] : toks_.back();
}

const Token& TokenStream::next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
}

bool TokenStream::at_word(std::string_view w) const {
    const Token& t = peek();
    return (t.kind == Tok::Ident || t.kind == Tok::Directive) && t.text == w;
}

bool TokenStream::accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
}

const Token& TokenStream::expect(Tok k, std::string_view what) {
    if (!at(k)) {
        const Token& t = peek();
        fail("expected " + std::string(what) +
             (t.kind == Tok::End ? std::string(", found end of input")
                                 : ", found '" + t.text + "'"));
    }
    return next();
}

void TokenStream::fail(const std::string& msg) const { fail_at(peek(), msg); }

void TokenStream::fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
}

Var x_index(std::string_view name) {
    if (name.size() < 2 || name[0] != 'x') return 0;
    Var v = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
    if (ec != std::errc() || p != name.data() + name.size()) return 0;
    // "x0" is a valid shape with index 0; callers report it.
    return v == 0 ? static_cast<Var>(-1) : v;
}

NameResolver::NameResolver(const std::vector<Token>& toks) {
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind == Tok::Directive && toks[i].text == "#vars") {
            if (header_) TokenStream::fail_at(toks[i], "duplicate #vars header");
            if (toks[i + 1].kind != Tok::Number)
                TokenStream::fail_at(toks[i + 1], "expected variable count after #vars");
            header_ = true;
            n_ = std::stoul(toks[i + 1].text);
        }
    }
    if (header_) return;
    std::vector<const Token*> idents;
    for (const auto& t : toks)
        if (t.kind == Tok::Ident && t.text != "not") idents.push_back(&t);
    for (const Token* t : idents) {
        if (x_index(t->text) == 0) {
            by_appearance_ = true;
            break;
        }
    }
    if (by_appearance_) {
        for (const Token* t : idents)
            if (names_.emplace(t->text, static_cast<Var>(names_.size() + 1)).second) ++n_;
        return;
    }
    for (const Token* t : idents) {
        Var v = x_index(t->text);
        if (v == static_cast<Var>(-1)) TokenStream::fail_at(*t, "atom index 0 is not allowed");
        if (v > n_) n_ = v;
    }
}

Var NameResolver::resolve(const Token& ident) const {
    if (by_appearance_) return names_.at(ident.text);
    Var v = x_index(ident.text);
    if (v == 0) TokenStream::fail_at(ident, "atom '" + ident.text + "' is not of the form x<i>");
    if (v == static_cast<Var>(-1)) TokenStream::fail_at(ident, "atom index 0 is not allowed");
    if (header_ && v > n_)
        TokenStream::fail_at(ident, "atom index " + std::to_string(v) +
                                        " exceeds declared signature " + std::to_string(n_));
    return v;
}

bool skip_header(TokenStream& ts) {
    if (!ts.at_word("#vars")) return false;
    ts.next();
    ts.expect(Tok::Number, "variable count");
    ts.expect(Tok::Dot, "'.'");
    return true;
}

} // namespace detail
} // namespace lpsucc

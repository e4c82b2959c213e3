#pragma once

// Text form of polynomials.
//
// Grammar (whitespace insignificant, '*' mandatory between factors):
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | uint '/' uint | variable | defined-name | '(' expr ')'
//
// A manifest is a sequence of lines "name := expr"; blank lines and lines
// starting with '#' are ignored. Each binding may use earlier names only.

#include "errors.hpp"
#include "poly.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bih {

/// Named polynomials visible to the parser.
using Scope = std::map<std::string, MultiPoly, std::less<>>;

namespace detail {

class Parser {
  public:
    Parser(std::string_view text, const Scope &scope) : text_(text), scope_(scope) {}

    MultiPoly parse_all() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string &what) const { throw SyntaxError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expr() {
        const bool negate = accept('-');
        MultiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc *= factor();
                continue;
            }
            const char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                fail("implicit multiplication; '*' required");
            return acc;
        }
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (accept('^')) {
            skip_ws();
            if (peek() == '-') throw NegativeExponent("negative exponent", pos_);
            const std::size_t at = pos_;
            const BigInt e = uint_literal();
            skip_ws();
            if (peek() == '/' || peek() == '.') fail("fractional exponent");
            if (!e.fits_ulong_p()) throw SyntaxError("exponent too large", at);
            return pow(b, e.get_ui());
        }
        return b;
    }

    MultiPoly base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = uint_literal();
            const std::size_t save = pos_;
            if (accept('/')) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("division only by integer literals");
                BigInt den = uint_literal();
                if (den == 0) throw SyntaxError("division by zero", save);
                return MultiPoly(make_rat(num, den));
            }
            return MultiPoly(BigRat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view ident = text_.substr(start, pos_ - start);
            if (auto it = scope_.find(ident); it != scope_.end()) return it->second;
            if (auto v = var_from_name(ident)) return MultiPoly::var(*v);
            throw UnknownName("unknown name '" + std::string(ident) + "' at byte " + std::to_string(start));
        }
        if (c == '\0') fail("unexpected end of input");
        if (c == '+' || c == '-') fail("unary operator not allowed here");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    BigInt uint_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected unsigned integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const Scope &scope_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse(std::string_view text, const Scope &scope = {}) {
    return detail::Parser(text, scope).parse_all();
}

/// Canonical text: terms in descending graded-lex order, variables in
/// registry order, coefficient first. parse(format(p)) == p.
inline std::string format(const MultiPoly &p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &t : p.terms()) {
        BigRat c = t.coeff;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        bool wrote = false;
        if (c != 1 || t.mono.is_one()) {
            out << c.get_str(10);
            wrote = true;
        }
        for (Var v : kAllVars) {
            const Exponent e = t.mono[v];
            if (e == 0) continue;
            if (wrote) out << '*';
            out << name(v);
            if (e > 1) out << '^' << e;
            wrote = true;
        }
    }
    return out.str();
}

struct Binding {
    std::string name;
    std::string text;
    MultiPoly value;
};

class Manifest {
  public:
    const std::vector<Binding> &bindings() const noexcept { return bindings_; }
    std::size_t size() const noexcept { return bindings_.size(); }
    const Scope &scope() const noexcept { return scope_; }

    bool contains(std::string_view name) const { return scope_.find(name) != scope_.end(); }

    const MultiPoly &at(std::string_view name) const {
        auto it = scope_.find(name);
        if (it == scope_.end()) throw UnknownName("manifest has no binding '" + std::string(name) + "'");
        return it->second;
    }

    /// Parses text against the bindings so far and appends it.
    void bind(std::string name, std::string text) {
        if (scope_.contains(name) || var_from_name(name))
            throw DuplicateName("name '" + name + "' is already bound");
        MultiPoly value;
        try {
            value = parse(text, scope_);
        } catch (const UnknownName &e) {
            throw ForwardReference("in '" + name + "': " + e.what());
        }
        scope_.emplace(name, value);
        const auto first = text.find_first_not_of(" \t\r"), last = text.find_last_not_of(" \t\r");
        text = first == std::string::npos ? std::string() : text.substr(first, last - first + 1);
        bindings_.push_back({std::move(name), std::move(text), std::move(value)});
    }

    /// Re-emits the manifest text, one binding per line.
    std::string text() const {
        std::string out;
        for (const auto &b : bindings_) out += b.name + " := " + b.text + "\n";
        return out;
    }

  private:
    std::vector<Binding> bindings_;
    Scope scope_;
};

inline Manifest load_manifest(std::string_view text) {
    Manifest manifest;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const std::size_t offset = line_start;
        line_start = line_end + 1;

        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        const std::size_t sep = line.find(":=");
        if (sep == std::string_view::npos) throw SyntaxError("expected 'name := expr'", offset + i);
        std::string_view lhs = line.substr(i, sep - i);
        while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.remove_suffix(1);
        const bool ident_ok =
            !lhs.empty() && (std::isalpha(static_cast<unsigned char>(lhs[0])) || lhs[0] == '_') &&
            std::all_of(lhs.begin(), lhs.end(),
                        [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
        if (!ident_ok) throw SyntaxError("bad binding name", offset + i);

        std::string_view rhs = line.substr(sep + 2);
        try {
            manifest.bind(std::string(lhs), std::string(rhs));
        } catch (const NegativeExponent &e) {
            throw NegativeExponent("in '" + std::string(lhs) + "': negative exponent",
                                   offset + sep + 2 + e.offset());
        } catch (const SyntaxError &e) {
            throw SyntaxError("in '" + std::string(lhs) + "': " + e.what(), offset + sep + 2 + e.offset());
        }
    }
    return manifest;
}

}  // namespace bih

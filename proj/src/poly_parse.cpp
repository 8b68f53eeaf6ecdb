#include <algorithm>
#include <cctype>

#include "ufdlab/poly.hpp"

namespace ufdlab {

namespace {

// Recursive descent over:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('+'|'-') unary | power
//   power := primary ('^' ['-'] integer)?
//   primary := integer | identifier | '(' expr ')'
class Parser {
public:
    Parser(const std::string& text, const VarTablePtr& vars, Field field)
        : s_(text), vars_(vars), field_(field) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        for (;;) {
            if (accept('*')) {
                p *= unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                p = p.scaled(d.leading().coeff.inverse());
            } else {
                return p;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            bool negative = accept('-');
            Int e = integer();
            if (!e.fits_slong_p()) fail("exponent too large");
            long long k = e.get_si();
            return base.pow(negative ? -k : k);
        }
        return base;
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial::constant(vars_, field_, FieldElem(field_, integer()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (!vars_->find(name)) fail("unknown variable '" + name + "'");
            return Polynomial::variable(vars_, field_, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    VarTablePtr vars_;
    Field field_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarTablePtr& vars, Field field) {
    return Parser(text, vars, field).parse();
}

std::vector<std::string> collect_identifiers(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            std::string name = text.substr(start, i - start);
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        } else if (std::isdigit(c)) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace ufdlab

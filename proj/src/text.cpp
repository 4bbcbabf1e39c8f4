// Text grammar:
//   poly := ['-'] term (('+'|'-') term)*
//   term := coef | [coef '*'] mono ('*' mono)*
//   mono := var ['^' nat]
//   coef := nat ['/' nat]
//   var  := 'x' | 'y' | 'z' | 'x' nat
// Whitespace is insignificant between tokens.

#include <algorithm>
#include <cctype>

#include "lacuna/core.hpp"

namespace lacuna {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : text_(text), n_(nvars) {}

    LacunaryPoly parse() {
        if (n_ == 0) throw PreconditionError("variable count must be positive");
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        terms.push_back(parse_term(negative));
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') throw SyntaxError("expected '+' or '-'", pos_);
            ++pos_;
            terms.push_back(parse_term(c == '-'));
        }
        return LacunaryPoly::from_terms(n_, std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Integer parse_nat() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected a natural number", start);
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Term parse_term(bool negative) {
        skip_ws();
        Term t{Coefficient(negative ? -1 : 1), ExponentVector(n_, 0)};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = parse_nat();
            Integer den = 1;
            skip_ws();
            if (peek() == '/') {
                const std::size_t slash = pos_++;
                den = parse_nat();
                if (den == 0) throw SyntaxError("zero denominator", slash);
            }
            Rational c(num, den);
            c.canonicalize();
            t.coef *= c;
            skip_ws();
            if (peek() != '*') return t;
            ++pos_;
        }
        parse_mono(t.exp);
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            parse_mono(t.exp);
        }
        return t;
    }

    void parse_mono(ExponentVector& exp) {
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek();
        std::size_t index = 0;  // 1-based
        if (c == 'x') {
            ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::size_t digits = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                const std::string num(text_.substr(digits, pos_ - digits));
                if (num.size() > 9) throw WrongVariable(name, start);
                index = std::stoul(num);
                if (index == 0 || index > n_) throw WrongVariable(name, start);
            } else {
                index = 1;
                if (n_ > 3) throw WrongVariable("x", start);
            }
        } else if (c == 'y' || c == 'z') {
            ++pos_;
            index = c == 'y' ? 2 : 3;
            if (n_ > 3 || index > n_) throw WrongVariable(std::string(1, c), start);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
            throw WrongVariable(std::string(text_.substr(pos_, end - pos_)), start);
        } else {
            throw SyntaxError("expected a variable", start);
        }
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-') throw NegativeExponent(pos_);
            exp[index - 1] += parse_nat();
        } else {
            exp[index - 1] += 1;
        }
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

LacunaryPoly parse_poly(std::string_view text, std::size_t nvars) {
    return Parser(text, nvars).parse();
}

std::size_t infer_arity(std::string_view text) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'y') n = std::max<std::size_t>(n, 2);
        if (c == 'z') n = std::max<std::size_t>(n, 3);
        if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            const auto digits = text.substr(i + 1, j - i - 1);
            if (digits.size() <= 9) n = std::max<std::size_t>(n, std::stoul(std::string(digits)));
            i = j - 1;
        }
    }
    return n;
}

std::string variable_name(std::size_t index, std::size_t nvars) {
    if (nvars <= 3) return std::string(1, "xyz"[index]);
    return "x" + std::to_string(index + 1);
}

std::string format_poly(const LacunaryPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = sgn(t.coef) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(t.coef);
        std::string mono;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(i, f.nvars());
            if (t.exp[i] != 1) mono += "^" + t.exp[i].get_str();
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace lacuna

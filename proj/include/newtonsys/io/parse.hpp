#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "newtonsys/core/errors.hpp"
#include "newtonsys/system.hpp"

namespace newtonsys {

namespace detail {

/// Recursive-descent parser for polynomials in x and y over Q.
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := number | 'x' | 'y' | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(const std::string& s, std::size_t base = 0) : s_(s), base_(base) {}

    BiRatPoly parse_all() {
        BiRatPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError(msg + " at byte " + std::to_string(base_ + i_), base_ + i_);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    BiRatPoly expr() {
        BiRatPoly r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    BiRatPoly term() {
        BiRatPoly r = unary();
        for (;;) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                const std::size_t at = i_;
                const BiRatPoly d = unary();
                const auto& t = d.terms();
                if (t.size() != 1 || t.begin()->first != std::pair<int, int>{0, 0}) {
                    i_ = at;
                    fail(d.terms().empty() ? "division by zero" : "division by a non-constant");
                }
                r = r * BiRatPoly::constant(1 / t.begin()->second);
            } else {
                return r;
            }
        }
    }

    BiRatPoly unary() {
        if (eat('-')) return BiRatPoly{} - unary();
        if (eat('+')) return unary();
        return power();
    }

    BiRatPoly power() {
        BiRatPoly base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a non-negative integer exponent");
        if (i_ - start > 4) fail("exponent too large");
        const int e = std::stoi(s_.substr(start, i_ - start));
        BiRatPoly r = BiRatPoly::constant(1);
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }

    BiRatPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            BiRatPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x' || c == 'y') {
            ++i_;
            if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) fail("unknown identifier");
            return c == 'x' ? BiRatPoly::monomial(1, 1, 0) : BiRatPoly::monomial(1, 0, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return BiRatPoly::constant(number());
        fail(std::isalpha(static_cast<unsigned char>(c)) ? "unknown identifier" : "unexpected '" + std::string(1, c) + "'");
    }

    // Decimal literal with optional fraction and exponent, converted exactly.
    Rational number() {
        const std::size_t start = i_;
        std::string digits;
        int scale = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
        if (i_ < s_.size() && s_[i_] == '.') {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                digits += s_[i_++];
                --scale;
            }
        }
        if (digits.empty()) {
            i_ = start;
            fail("malformed number");
        }
        if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            int sgn = 1;
            if (j < s_.size() && (s_[j] == '+' || s_[j] == '-')) sgn = s_[j++] == '-' ? -1 : 1;
            const std::size_t es = j;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (es == j) {
                i_ = j;
                fail("malformed exponent");
            }
            if (j - es > 4) {
                i_ = es;
                fail("exponent too large");
            }
            scale += sgn * std::stoi(s_.substr(es, j - es));
            i_ = j;
        }
        Rational r{Integer(digits, 10)};
        const Rational ten(10);
        r *= scale >= 0 ? pow(ten, static_cast<unsigned>(scale)) : 1 / pow(ten, static_cast<unsigned>(-scale));
        r.canonicalize();
        return r;
    }

    const std::string& s_;
    std::size_t base_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Polynomial in x and y.
inline BiRatPoly parse_polynomial(const std::string& text, std::size_t base = 0) {
    return detail::ExprParser(text, base).parse_all();
}

/// "y' = <poly in x, y>" or just the right-hand side.
inline NewtonSystem parse_expression_system(const std::string& text) {
    std::size_t start = 0;
    if (const auto eq = text.find('='); eq != std::string::npos) {
        std::string lhs;
        for (char c : text.substr(0, eq))
            if (!std::isspace(static_cast<unsigned char>(c))) lhs += c;
        if (lhs != "y'" && lhs != "dy/dt" && lhs != "ydot") throw InputError("left-hand side must be y'", 0);
        start = eq + 1;
    }
    const NewtonSystem S = NewtonSystem::from_rhs(parse_polynomial(text.substr(start), start));
    if (S.m() < 0) throw InputError("right-hand side is identically zero", start);
    return S;
}

/// Coefficient form: {"P": [P0, P1, ...]} or a bare array. Each P_i is a
/// list of ascending x-coefficients (strings "p/q" or integers) or a
/// polynomial string in x.
inline NewtonSystem system_from_json(const nlohmann::json& j) {
    const nlohmann::json& arr = j.is_object() ? j.at("P") : j;
    if (!arr.is_array()) throw InputError("coefficient form needs an array of P_i");
    std::vector<RatPoly> P;
    for (const auto& e : arr) {
        if (e.is_string()) {
            const BiRatPoly b = parse_polynomial(e.get<std::string>());
            if (b.degree_v() > 0) throw InputError("P_i may only depend on x");
            P.push_back(b.coeff_of_v(0));
        } else if (e.is_array()) {
            std::vector<Rational> c;
            for (const auto& a : e) {
                if (a.is_number_integer()) c.emplace_back(a.get<long>());
                else if (a.is_string()) c.push_back(parse_rational(a.get<std::string>()));
                else throw InputError("coefficients must be integers or \"p/q\" strings");
            }
            P.emplace_back(std::move(c));
        } else {
            throw InputError("each P_i must be a coefficient list or a polynomial string");
        }
    }
    NewtonSystem S(std::move(P));
    if (S.m() < 0) throw InputError("system is identically zero");
    return S;
}

/// Accepts the expression form or (leading '{' or '[') the coefficient form.
inline NewtonSystem parse_system(const std::string& text) {
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k == text.size()) throw InputError("empty input", 0);
    if (text[k] == '{' || text[k] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
        }
        try {
            return system_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed coefficient form: ") + e.what());
        }
    }
    return parse_expression_system(text);
}

/// Canonical text: terms by increasing y-power, then x-power.
inline std::string print_system(const NewtonSystem& S) {
    std::string out;
    for (int j = 0; j <= S.m(); ++j) {
        const RatPoly& p = S.P()[static_cast<std::size_t>(j)];
        for (int i = 0; i <= p.degree(); ++i) {
            const Rational a = p.coeff(i);
            if (a == 0) continue;
            out += out.empty() ? (a < 0 ? "-" : "") : (a < 0 ? " - " : " + ");
            std::string mono;
            if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
            if (j > 0) mono += (mono.empty() ? "" : "*") + std::string(j == 1 ? "y" : "y^" + std::to_string(j));
            const Rational mag = abs(a);
            if (mono.empty()) out += mag.get_str();
            else if (mag == 1) out += mono;
            else out += mag.get_str() + "*" + mono;
        }
    }
    return "y' = " + (out.empty() ? std::string("0") : out);
}

}  // namespace newtonsys

/*
   Copyright 2026 the hypcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hypcf/poly_io.hpp"

#include <cctype>

#include "hypcf/valuation.hpp"

namespace hypcf {

namespace {

// Recursive-descent parser over Q(t)[x]. Division is allowed only by values
// constant in x, matching the grammar's "(...) groups of rational functions
// in t" for coefficients.
class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly<RatFunc> run() {
        auto v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    using P = Poly<RatFunc>;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : -1;
    }

    P expr() {
        skip_ws();
        if (pos_ == s_.size()) fail("empty expression");
        P acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    P term() {
        P acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                P den = factor();
                if (den.degree() > 0) fail("division by an expression involving x");
                if (is_zero(den)) fail("division by zero");
                RatFunc c = den.coeff_or(0, RatFunc());
                acc = acc * Poly<RatFunc>::constant(one_like(c) / c);
            } else {
                break;
            }
        }
        return acc;
    }

    P factor() {
        bool neg = false;
        for (;;) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        P base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            P acc = P::constant(RatFunc::from_rat(Rat(1)));
            for (long i = 0; i < e; ++i) acc = acc * base;
            base = acc;
        }
        return neg ? -base : base;
    }

    P atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a value");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return P::constant(RatFunc::from_rat(Rat(v)));
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return P::monomial(RatFunc::from_rat(Rat(1)), 1);
        }
        if (c == 't' || c == 'T') {
            ++pos_;
            return P::constant(RatFunc::t_power(1));
        }
        if (c == '(') {
            ++pos_;
            P v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1L << 60)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string rat_term_str(const Rat& c, int k, const std::string& var, bool first) {
    std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Rat a = abs(c);
    std::string body;
    if (k == 0) {
        body = a.get_str();
    } else {
        std::string xs = k == 1 ? var : var + "^" + std::to_string(k);
        body = (a == 1) ? xs : a.get_str() + "*" + xs;
    }
    return sign + body;
}

}  // namespace

Poly<RatFunc> parse_poly_qt(const std::string& text) { return Parser(text).run(); }

Poly<Rat> to_rat_poly(const Poly<RatFunc>& f) {
    std::vector<Rat> out;
    int idx = 0;
    for (const auto& c : f.coeffs()) {
        if (!c.is_constant())
            throw InvalidInput("coefficient of x^" + std::to_string(idx) +
                               " involves t; not in the requested field");
        out.push_back(is_zero(c) ? Rat(0) : c.num().coeff_or(0, Rat(0)));
        ++idx;
    }
    return Poly<Rat>(std::move(out));
}

Poly<Fp> to_fp_poly(const Poly<Rat>& f, std::uint64_t p) {
    PAdicValuation nu(p);
    for (const auto& c : f.coeffs())
        if (!is_zero(c) && nu.val(c) < 0)
            throw InvalidInput("coefficient " + rat_str(c) + " not defined mod " +
                               std::to_string(p));
    return reduce_poly(f, nu);
}

Poly<RatFunc> to_qt_poly(const Poly<Rat>& f) {
    std::vector<RatFunc> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(RatFunc::from_rat(c));
    return Poly<RatFunc>(std::move(out));
}

Poly<Rat> parse_poly_q(const std::string& text) { return to_rat_poly(parse_poly_qt(text)); }

Poly<Fp> parse_poly_fp(const std::string& text, std::uint64_t p) {
    return to_fp_poly(parse_poly_q(text), p);
}

std::string elem_str(const Rat& x) { return x.get_str(); }
std::string elem_str(const Fp& x) { return x.str(); }

std::string elem_str(const RatFunc& x) {
    if (is_zero(x)) return "0";
    std::string num = poly_str(x.num(), "t");
    if (x.den().degree() == 0) return num;
    return "(" + num + ")/(" + poly_str(x.den(), "t") + ")";
}

template <>
std::string poly_str<Rat>(const Poly<Rat>& f, const std::string& var) {
    if (is_zero(f)) return "0";
    std::string out;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        Rat c = f.coeff_or(k, Rat(0));
        if (is_zero(c)) continue;
        out += rat_term_str(c, k, var, first);
        first = false;
    }
    return out;
}

template <>
std::string poly_str<Fp>(const Poly<Fp>& f, const std::string& var) {
    if (is_zero(f)) return "0";
    std::string out;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        Fp c = f.coeff_or(k, Fp(0, f.lc().modulus()));
        if (is_zero(c)) continue;
        std::string body;
        if (k == 0)
            body = c.str();
        else {
            std::string xs = k == 1 ? var : var + "^" + std::to_string(k);
            body = c.value() == 1 ? xs : c.str() + "*" + xs;
        }
        out += first ? body : " + " + body;
        first = false;
    }
    return out;
}

template <>
std::string poly_str<RatFunc>(const Poly<RatFunc>& f, const std::string& var) {
    if (is_zero(f)) return "0";
    std::string out;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        RatFunc c = f.coeff_or(k, RatFunc());
        if (is_zero(c)) continue;
        // pure rational coefficients print like over Q; anything with t gets
        // wrapped so the result re-parses
        if (c.is_constant()) {
            out += rat_term_str(c.num().coeff_or(0, Rat(0)), k, var, first);
        } else {
            std::string body = "(" + poly_str(c.num(), "t") + ")";
            if (c.den().degree() > 0) body += "/(" + poly_str(c.den(), "t") + ")";
            if (k > 0) body += "*" + (k == 1 ? var : var + "^" + std::to_string(k));
            out += first ? body : " + " + body;
        }
        first = false;
    }
    return out;
}

}  // namespace hypcf

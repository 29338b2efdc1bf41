/*
   Copyright 2026 The peterweyl authors

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

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in the rational function field Q(q).
 *
 * QScalar is a fraction num/den of integer-coefficient polynomials in q,
 * kept in a unique canonical form: gcd(num, den) = 1 in Z[q] (including
 * integer content) and den has positive leading coefficient.  Equal field
 * elements therefore have bitwise identical representations, which makes
 * every downstream identity check exact.
 *
 * Laurent input (negative powers of q) is accepted everywhere and cleared
 * into the polynomial fraction, e.g. q - q^-1 becomes (q^2-1)/q.
 */

#ifndef PETERWEYL_SCALAR_HPP
#define PETERWEYL_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pw {

using BigInt = mpz_class;
using BigRat = mpq_class;

/** Dense integer-coefficient polynomial in q.  coeff(i) is the q^i term. */
class ZPoly {
   public:
    ZPoly() = default;
    ZPoly(long v) {
        if (v != 0) c_.emplace_back(v);
    }
    ZPoly(BigInt v) {
        if (v != 0) c_.push_back(std::move(v));
    }

    static ZPoly variable() { return monomial(1, 1); }
    static ZPoly monomial(BigInt coeff, int deg) {
        ZPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /** Degree, with deg(0) = -1. */
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int i) const {
        static const BigInt zero(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : zero;
    }
    const BigInt& leading() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    void set_coeff(int i, const BigInt& v) {
        if (i < 0) throw std::invalid_argument("negative exponent in ZPoly");
        if (i >= static_cast<int>(c_.size())) {
            if (v == 0) return;
            c_.resize(static_cast<size_t>(i) + 1, BigInt(0));
        }
        c_[static_cast<size_t>(i)] = v;
        prune();
    }

    ZPoly operator-() const {
        ZPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.prune();
        return r;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly();
        ZPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.prune();
        return r;
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /** gcd of all coefficients, nonnegative; content(0) = 0. */
    BigInt content() const {
        BigInt g(0);
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /** Divides every coefficient by d (must be exact). */
    ZPoly divided_by_int(const BigInt& d) const {
        if (d == 0) throw std::invalid_argument("division by zero content");
        ZPoly r(*this);
        for (auto& x : r.c_) {
            if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
                throw std::logic_error("inexact content division");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        }
        return r;
    }

    ZPoly primitive_part() const {
        if (is_zero()) return ZPoly();
        BigInt g = content();
        if (leading() < 0) g = -g;
        return divided_by_int(g);
    }

    /** Exact division in Z[q]; throws std::logic_error when not exact. */
    static ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        if (a.is_zero()) return ZPoly();
        if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
        ZPoly rem(a);
        ZPoly quot;
        quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int shift = rem.degree() - b.degree();
            BigInt c;
            if (!mpz_divisible_p(rem.leading().get_mpz_t(), b.leading().get_mpz_t()))
                throw std::logic_error("inexact polynomial division");
            mpz_divexact(c.get_mpz_t(), rem.leading().get_mpz_t(), b.leading().get_mpz_t());
            quot.c_[static_cast<size_t>(shift)] = c;
            rem = rem - ZPoly::monomial(c, shift) * b;
        }
        if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
        quot.prune();
        return quot;
    }

    /**
     * gcd in Z[q] (primitive pseudo-remainder sequence), normalized to
     * positive leading coefficient.  Includes the integer content.
     */
    static ZPoly gcd(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero()) return b.is_zero() ? ZPoly() : positive_lead(b);
        if (b.is_zero()) return positive_lead(a);
        BigInt cont;
        mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        ZPoly x = a.primitive_part();
        ZPoly y = b.primitive_part();
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            ZPoly r = pseudo_rem(x, y);
            x = std::move(y);
            y = r.is_zero() ? ZPoly() : r.primitive_part();
        }
        ZPoly g = x.primitive_part();
        for (auto& c : g.c_) c *= cont;
        return g;
    }

    /** Sum of coefficients, i.e. the value at q = 1. */
    BigInt eval_one() const {
        BigInt s(0);
        for (const auto& x : c_) s += x;
        return s;
    }

    /** True when the polynomial is c*q^d for a single monomial (or zero). */
    bool is_monomial() const {
        if (c_.empty()) return true;
        for (size_t i = 0; i + 1 < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /** Smallest exponent with a nonzero coefficient; 0 for the zero polynomial. */
    int trailing_degree() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0;
    }

    /** Canonical text form, descending powers, no spaces: "q^4+q^2-2". */
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& c = coeff(i);
            if (c == 0) continue;
            const bool first = out.empty();
            if (c < 0)
                out += first ? "-" : "-";
            else if (!first)
                out += "+";
            BigInt ac = abs(c);
            if (ac != 1 || i == 0) out += ac.get_str();
            if (i > 0) {
                if (ac != 1) out += "*";
                out += (i == 1) ? "q" : ("q^" + std::to_string(i));
            }
        }
        return out;
    }

   private:
    std::vector<BigInt> c_;

    void prune() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static ZPoly positive_lead(const ZPoly& p) {
        return (p.leading() < 0) ? -p : p;
    }

    static ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
        ZPoly r(a);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int shift = r.degree() - b.degree();
            const BigInt c = r.leading();
            ZPoly scaled;
            scaled.c_.reserve(r.c_.size());
            for (auto& x : r.c_) scaled.c_.push_back(x * b.leading());
            scaled.prune();
            r = scaled - ZPoly::monomial(c, shift) * b;
        }
        return r;
    }
};

/** An element of Q(q) in canonical reduced form. */
class QScalar {
   public:
    QScalar() : num_(), den_(1) {}
    QScalar(long v) : num_(v), den_(1) {}
    QScalar(const BigInt& v) : num_(v), den_(1) {}
    QScalar(const BigRat& v) : num_(v.get_num()), den_(v.get_den()) {}

    /** The indeterminate q. */
    static QScalar q() { return QScalar(ZPoly::variable(), ZPoly(1), Canonical{}); }

    /** q^e for any integer e (negative exponents produce 1/q^|e|). */
    static QScalar q_pow(int e) {
        if (e >= 0) return QScalar(ZPoly::monomial(1, e), ZPoly(1), Canonical{});
        return QScalar(ZPoly(1), ZPoly::monomial(1, -e), Canonical{});
    }

    /** Builds num/den and reduces to canonical form; throws on zero denominator. */
    static QScalar from_fraction(const ZPoly& num, const ZPoly& den) {
        if (den.is_zero()) throw std::domain_error("division by zero in Q(q)");
        if (num.is_zero()) return QScalar();
        ZPoly g = ZPoly::gcd(num, den);
        ZPoly n = ZPoly::div_exact(num, g);
        ZPoly d = ZPoly::div_exact(den, g);
        if (d.leading() < 0) {
            n = -n;
            d = -d;
        }
        return QScalar(std::move(n), std::move(d), Canonical{});
    }

    /** The quantum integer [n]_q = (q^n - q^-n)/(q - q^-1), with [n] at q=1 equal to n. */
    static QScalar quantum_integer(int n) {
        if (n < 0) return -quantum_integer(-n);
        // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n), cleared to (sum q^(2i)) / q^(n-1).
        ZPoly num;
        for (int i = 0; i < n; ++i) num = num + ZPoly::monomial(1, 2 * i);
        return from_fraction(num, ZPoly::monomial(1, n > 0 ? n - 1 : 0));
    }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /** True when the value is a q-free integer. */
    bool is_integer_constant() const { return den_.is_one() && num_.degree() <= 0; }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    QScalar operator-() const { return QScalar(-num_, den_, Canonical{}); }

    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return from_fraction(a.num_ + b.num_, a.den_);
        ZPoly g = ZPoly::gcd(a.den_, b.den_);
        ZPoly da = ZPoly::div_exact(a.den_, g);
        ZPoly db = ZPoly::div_exact(b.den_, g);
        return from_fraction(a.num_ * db + b.num_ * da, da * b.den_);
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        if (a.is_zero() || b.is_zero()) return QScalar();
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        // Cross-reduce before multiplying to keep intermediate degrees down.
        ZPoly g1 = ZPoly::gcd(a.num_, b.den_);
        ZPoly g2 = ZPoly::gcd(b.num_, a.den_);
        ZPoly n = ZPoly::div_exact(a.num_, g1) * ZPoly::div_exact(b.num_, g2);
        ZPoly d = ZPoly::div_exact(a.den_, g2) * ZPoly::div_exact(b.den_, g1);
        if (d.leading() < 0) {
            n = -n;
            d = -d;
        }
        return QScalar(std::move(n), std::move(d), Canonical{});
    }
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(q)");
        ZPoly n = den_;
        ZPoly d = num_;
        if (d.leading() < 0) {
            n = -n;
            d = -d;
        }
        return QScalar(std::move(n), std::move(d), Canonical{});
    }

    QScalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        QScalar r(1);
        QScalar base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /** True when the element has no pole at q = 1. */
    bool regular_at_one() const { return den_.eval_one() != 0; }

    /** Exact value at q = 1; throws std::domain_error on a pole. */
    BigRat at_one() const {
        BigInt d = den_.eval_one();
        if (d == 0) throw std::domain_error("not regular at q=1");
        BigRat r(num_.eval_one(), d);
        r.canonicalize();
        return r;
    }

    /**
     * Canonical serialization "P(q)/Q(q)": numerator parenthesized whenever a
     * denominator is present, denominator parenthesized unless it is a single
     * monomial.  Examples: "q+1", "(q^2+1)/q", "(q^2)/(q^2+1)".
     */
    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string out = "(" + num_.str() + ")/";
        // only single-token denominators (q^k or a bare integer) go unparenthesized
        if (den_.is_monomial() && (den_.degree() == 0 || den_.leading() == 1)) {
            out += den_.str();
        } else {
            out += "(" + den_.str() + ")";
        }
        return out;
    }

    /**
     * Laurent-style display with spaced signs, used by the relation printers:
     * "q - q^-1", "q^2", "1".  Falls back to the canonical fraction form when
     * the denominator is not a plain power of q.
     */
    std::string laurent_str() const {
        if (is_zero()) return "0";
        if (!(den_.is_monomial() && den_.leading() == 1)) {
            if (den_.is_one()) return num_.str();
            return str();
        }
        const int shift = den_.degree();
        std::string out;
        for (int i = num_.degree(); i >= 0; --i) {
            const BigInt& c = num_.coeff(i);
            if (c == 0) continue;
            const int e = i - shift;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            BigInt ac = abs(c);
            if (ac != 1 || e == 0) out += ac.get_str();
            if (e != 0) {
                if (ac != 1) out += "*";
                out += (e == 1) ? "q" : ("q^" + std::to_string(e));
            }
        }
        return out;
    }

    /** True when laurent_str() needs more than one multiplicand token. */
    bool laurent_is_composite() const {
        std::string s = laurent_str();
        return s.find(' ') != std::string::npos;
    }

    /**
     * Parses an expression over integers, q, '^' (integer exponents, possibly
     * negative), '*', '/', '+', '-', and parentheses.  Laurent input is
     * cleared into canonical form, so parse("q-q^-1") == (q^2-1)/q.
     */
    static QScalar parse(const std::string& text) {
        Parser p{text, 0};
        QScalar v = p.parse_sum();
        p.skip_ws();
        if (p.pos != text.size()) throw std::invalid_argument("trailing characters in scalar: " + text);
        return v;
    }

   private:
    struct Canonical {};
    QScalar(ZPoly n, ZPoly d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}

    ZPoly num_;
    ZPoly den_;

    struct Parser {
        const std::string& s;
        size_t pos;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        QScalar parse_sum() {
            skip_ws();
            bool neg = false;
            if (eat('-'))
                neg = true;
            else
                eat('+');
            QScalar v = parse_product();
            if (neg) v = -v;
            for (;;) {
                skip_ws();
                if (eat('+'))
                    v += parse_product();
                else if (eat('-'))
                    v -= parse_product();
                else
                    return v;
            }
        }
        QScalar parse_product() {
            QScalar v = parse_atom();
            for (;;) {
                skip_ws();
                if (eat('*'))
                    v *= parse_atom();
                else if (eat('/'))
                    v /= parse_atom();
                else
                    return v;
            }
        }
        int parse_int() {
            skip_ws();
            bool neg = eat('-');
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("expected integer in scalar: " + s);
            int v = std::atoi(s.substr(start, pos - start).c_str());
            return neg ? -v : v;
        }
        QScalar parse_atom() {
            skip_ws();
            if (eat('(')) {
                QScalar v = parse_sum();
                if (!eat(')')) throw std::invalid_argument("unbalanced parenthesis in scalar: " + s);
                return maybe_pow(v);
            }
            if (pos < s.size() && s[pos] == 'q') {
                ++pos;
                return maybe_pow(QScalar::q());
            }
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                return maybe_pow(QScalar(BigInt(s.substr(start, pos - start))));
            }
            throw std::invalid_argument("unexpected character in scalar: " + s);
        }
        QScalar maybe_pow(QScalar base) {
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                return base.pow(parse_int());
            }
            return base;
        }
    };
};

}  // namespace pw

#endif  // PETERWEYL_SCALAR_HPP

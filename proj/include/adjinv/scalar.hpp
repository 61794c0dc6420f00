#pragma once

/**
 * @file scalar.hpp
 * @brief Exact Gaussian rationals.
 *
 * A Scalar is a complex number whose real and imaginary parts are each a
 * reduced rational (GMP mpq_class). Both parts are kept canonical after every
 * operation, so structural equality is field equality.
 */

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "adjinv/errors.hpp"

namespace adjinv {

class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {  // NOLINT
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Real rational num/den. Throws std::domain_error on den == 0.
    static Scalar ratio(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// |z|^2 as an exact rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        mpq_class n = norm();
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (is_real() && o.is_real()) {
            re_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

namespace detail {

inline std::string rational_to_string(const mpq_class& q) {
    // mpq_class::get_str prints "p" for integers and "p/q" otherwise.
    return q.get_str();
}

}  // namespace detail

/// Exact textual form: "p/q", "a+bi", "a-bi", "bi". Reparses with parse_scalar.
inline std::string to_string(const Scalar& s) {
    const auto& re = s.real();
    const auto& im = s.imag();
    if (sgn(im) == 0) return detail::rational_to_string(re);
    std::string imag = detail::rational_to_string(im) + "i";
    if (sgn(re) == 0) return imag;
    std::string out = detail::rational_to_string(re);
    if (sgn(im) > 0) out += '+';
    return out + imag;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

namespace detail {

class ScalarLexer {
public:
    explicit ScalarLexer(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ == text_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar '" + std::string(text_) + "': " + what, pos_);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) fail("expected digit");
        return std::string(text_.substr(start, pos_ - start));
    }

    // digits ['/' digits] | digits '.' digits, without sign.
    mpq_class unsigned_rational() {
        std::string whole = digits();
        if (peek() == '/') {
            advance();
            std::size_t den_pos = pos_;
            std::string den = digits();
            mpz_class d(den);
            if (d == 0) throw ParseError("scalar '" + std::string(text_) + "': zero denominator", den_pos);
            mpq_class q{mpz_class(whole), d};
            q.canonicalize();
            return q;
        }
        if (peek() == '.') {
            advance();
            std::string frac = digits();
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
            mpq_class q{mpz_class(whole + frac), scale};
            q.canonicalize();
            return q;
        }
        return mpq_class(mpz_class(whole));
    }

    mpq_class signed_rational() {
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            advance();
        }
        mpq_class q = unsigned_rational();
        return negative ? mpq_class(-q) : q;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/**
 * Parse one scalar token.
 *
 *   rational := ['+'|'-'] digits ['/' digits] | ['+'|'-'] digits '.' digits
 *   complex  := rational | rational ('+'|'-') rational 'i' | rational 'i'
 *
 * Decimal literals convert exactly (1.5 -> 3/2). Errors carry the byte offset.
 */
inline Scalar parse_scalar(std::string_view text) {
    detail::ScalarLexer lex(text);
    if (text.empty()) lex.fail("empty token");
    mpq_class first = lex.signed_rational();
    if (lex.at_end()) return Scalar(first);
    if (lex.peek() == 'i') {
        lex.advance();
        if (!lex.at_end()) lex.fail("trailing characters");
        return Scalar(0, first);
    }
    if (lex.peek() != '+' && lex.peek() != '-') lex.fail("unexpected character");
    bool negative = lex.peek() == '-';
    lex.advance();
    mpq_class second = lex.unsigned_rational();
    if (lex.peek() != 'i') lex.fail("expected 'i'");
    lex.advance();
    if (!lex.at_end()) lex.fail("trailing characters");
    return Scalar(first, negative ? mpq_class(-second) : second);
}

}  // namespace adjinv

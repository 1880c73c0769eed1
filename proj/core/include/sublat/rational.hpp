#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "sublat/errors.hpp"

namespace sublat {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign on either part). Rejects anything
/// else, in particular zero denominators, before GMP canonicalization can
/// trip over them.
Rational parse_rational(const std::string& text);

/// Canonical "p" / "p/q" rendering; inverse of parse_rational.
std::string to_string(const Rational& r);

/// Exact complex scalar a + bi with rational real and imaginary parts: an
/// element of the field Q(i). Every matrix entry in this library is one of
/// these, so equality of derived objects is decidable.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int value) : re_(value), im_(0) {}           // NOLINT(google-explicit-constructor)
    GaussianRational(long value) : re_(value), im_(0) {}          // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    /// Complex conjugate a - bi.
    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws DivisionByZeroError on a zero divisor.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Display form: "0", "1/2", "i", "-i/3", "1/2-i/2".
    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

/// Lexicographic (re, im) order. A canonical sort key, not the (nonexistent)
/// complex field order.
int compare(const GaussianRational& a, const GaussianRational& b);

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

} // namespace sublat

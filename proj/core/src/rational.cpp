#include "sublat/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace sublat {
namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

// GMP rejects an explicit plus sign, so shed it first.
mpz_class make_integer(const std::string& s) {
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw Error("invalid rational literal \"" + text + "\"");
    }
    if (slash == std::string::npos) {
        return Rational(make_integer(num));
    }
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(den)) {
        throw Error("invalid rational literal \"" + text + "\"");
    }
    mpz_class d = make_integer(den);
    if (sgn(d) == 0) {
        throw DivisionByZeroError("zero denominator in rational literal \"" + text + "\"");
    }
    Rational r(make_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) {
        throw DivisionByZeroError("division by zero Gaussian rational");
    }
    // 1/(c+di) = (c-di)/(c^2+d^2)
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    GaussianRational inv(o.re_ / norm, -o.im_ / norm);
    return *this *= inv;
}

namespace {

// Renders a nonzero imaginary part q as "i", "-i", "2i", "i/2", "-3i/2".
std::string imaginary_string(const Rational& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    std::string s;
    if (num == 1) {
        s = "i";
    } else if (num == -1) {
        s = "-i";
    } else {
        s = num.get_str() + "i";
    }
    if (den != 1) {
        s += "/" + den.get_str();
    }
    return s;
}

} // namespace

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return to_string(re_);
    if (sgn(re_) == 0) return imaginary_string(im_);
    std::string s = to_string(re_);
    if (sgn(im_) > 0) s += "+";
    return s + imaginary_string(im_);
}

int compare(const GaussianRational& a, const GaussianRational& b) {
    const int c = cmp(a.re(), b.re());
    if (c != 0) return c;
    return cmp(a.im(), b.im());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
    return os << value.str();
}

} // namespace sublat

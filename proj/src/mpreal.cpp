#include "thetamod/mpreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace thetamod {

namespace {

Precision max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(Precision prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, Precision prec) {
    mpfr_init2(value_, prec);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision prec) {
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(long value, Precision prec) {
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::parse(std::string_view text, Precision prec) {
    Real r(prec);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("not a decimal number: '" + s + "'");
    if (!r.is_finite()) throw std::invalid_argument("not a finite number: '" + s + "'");
    return r;
}

Real Real::pi(Precision prec) {
    Real r(prec);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

Real Real::exp2(long exponent, Precision prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.value_, 1, exponent, MPFR_RNDN);
    return r;
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    // Leave `other` as a valid minimal-precision zero.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision prec) const {
    Real r(prec);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (is_zero()) return "0";
    mpfr_exp_t exp10 = 0;
    std::vector<char> buf(static_cast<std::size_t>(digits) + 8);
    mpfr_get_str(buf.data(), &exp10, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
    std::string mant(buf.data());
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string out = neg ? "-" : "";
    if (exp10 > 0 && exp10 <= digits) {
        out += mant.substr(0, static_cast<std::size_t>(exp10));
        if (static_cast<std::size_t>(exp10) < mant.size()) out += "." + mant.substr(static_cast<std::size_t>(exp10));
    } else if (exp10 <= 0 && exp10 > -8) {
        out += "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
    } else {
        out += mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
    }
    return out;
}

Real& Real::operator+=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real operator-(const Real& x) {
    Real r(x.precision());
    mpfr_neg(r.value_, x.value_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, unsigned long k) {
    Real r(x.precision());
    mpfr_pow_ui(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.precision() != im_.precision()) {
        Precision p = std::max(re_.precision(), im_.precision());
        re_ = re_.with_precision(p);
        im_ = im_.with_precision(p);
    }
}

Complex Complex::parse_pair(std::string_view text, Precision prec) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("expected a complex number as 're,im', got '" + std::string(text) + "'");
    }
    return {Real::parse(text.substr(0, comma), prec), Real::parse(text.substr(comma + 1), prec)};
}

Precision Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex Complex::with_precision(Precision prec) const { return {re_.with_precision(prec), im_.with_precision(prec)}; }

Complex& Complex::operator+=(const Complex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    *this = *this * rhs;
    return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

Complex operator-(const Complex& z) { return {-z.re_, -z.im_}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }

Complex operator/(const Complex& a, const Complex& b) {
    Real den = norm(b);
    if (den.is_zero()) throw std::domain_error("complex division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

Complex operator/(const Complex& a, const Real& b) {
    if (b.is_zero()) throw std::domain_error("complex division by zero");
    return {a.re_ / b, a.im_ / b};
}

std::string Complex::to_string(int digits) const {
    std::string im = im_.to_string(digits);
    if (im.front() == '-') return re_.to_string(digits) + " - " + im.substr(1) + "i";
    return re_.to_string(digits) + " + " + im + "i";
}

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
    return r;
}

Complex exp(const Complex& z) {
    Precision p = z.precision();
    Real mod = exp(z.real());
    Real c(p), s(p);
    mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
    return {mod * c, mod * s};
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw std::domain_error("logarithm of zero");
    Precision p = z.precision();
    Real arg(p);
    mpfr_atan2(arg.get(), z.imag().get(), z.real().get(), MPFR_RNDN);
    return {log(abs(z)), arg};
}

Complex pow(const Complex& z, unsigned long k) {
    Complex result(Real(1L, z.precision()), Real(0L, z.precision()));
    Complex base = z;
    while (k != 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k != 0) base *= base;
    }
    return result;
}

Complex exp_i_pi(const Complex& z) {
    Real pi = Real::pi(z.precision());
    // i*pi*(a + bi) = -pi*b + i*pi*a
    return exp(Complex(-(pi * z.imag()), pi * z.real()));
}

int decimal_digits(Precision bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)); }

}  // namespace thetamod

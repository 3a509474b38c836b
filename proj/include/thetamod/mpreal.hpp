#pragma once

// Thin RAII layer over MPFR: a real number carrying its own precision and a
// complex number built from two of them. Binary operations round to the
// larger of the operand precisions.

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace thetamod {

using Precision = mpfr_prec_t;

class Real {
public:
    explicit Real(Precision prec = 64);
    Real(double value, Precision prec);
    Real(const mpz_class& value, Precision prec);
    Real(long value, Precision prec);
    // Parses a decimal literal; throws std::invalid_argument on malformed input.
    static Real parse(std::string_view text, Precision prec);
    static Real pi(Precision prec);
    static Real exp2(long exponent, Precision prec);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    Precision precision() const { return mpfr_get_prec(value_); }
    Real with_precision(Precision prec) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // Binary exponent e with 2^(e-1) <= |x| < 2^e; meaningless for zero.
    long exponent2() const { return mpfr_get_exp(value_); }

    // Decimal rendering with the given number of significant digits.
    std::string to_string(int digits) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator-(const Real& x);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, unsigned long k);
Real max(const Real& a, const Real& b);

class Complex {
public:
    explicit Complex(Precision prec = 64) : re_(prec), im_(prec) {}
    Complex(Real re, Real im);
    Complex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}
    // Parses "re,im" with decimal components.
    static Complex parse_pair(std::string_view text, Precision prec);

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }
    Precision precision() const;
    Complex with_precision(Precision prec) const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator*=(const Real& rhs);

    friend Complex operator-(const Complex& z);
    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Real& b);
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator/(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Real& b);

    std::string to_string(int digits) const;

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex pow(const Complex& z, unsigned long k);
// exp(i*pi*z)
Complex exp_i_pi(const Complex& z);

// Decimal digits that carry the information of `bits` binary digits.
int decimal_digits(Precision bits);

}  // namespace thetamod

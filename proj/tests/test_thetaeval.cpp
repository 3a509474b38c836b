#include "oracles.hpp"
#include "thetamod/thetaeval.hpp"

#include <doctest.h>

#include <cmath>

using namespace thetamod;

namespace {

Complex c(const char* s, Precision p = 256) { return Complex::parse_pair(s, p + kGuardBits); }

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

}  // namespace

TEST_CASE("nomes") {
    QPoint i = nome_from_tau(c("0,1"), 256);
    CHECK(i.q.real().to_string(15) == "0.0432139182637722");
    CHECK(i.q.imag().is_zero());
    QPoint two_i = nome_from_tau(c("0,2"), 256);
    CHECK(dist(two_i.q, i.q * i.q) < 1e-70);
    QPoint shifted = nome_from_tau(c("1,1"), 256);
    CHECK(dist(shifted.q, Complex(i.q.precision()) - i.q) < 1e-70);
    CHECK_THROWS_AS(nome_from_tau(c("0,0"), 256), std::domain_error);
    CHECK_THROWS_AS(nome_from_tau(c("0.3,-1"), 256), std::domain_error);
    CHECK_THROWS_AS(QPoint::from_nome(c("0.6,0.8"), 256), std::domain_error);
}

TEST_CASE("transformed nomes route through tau") {
    const Complex tau = c("0.1,0.7");
    CHECK(dist(transformed_nome(tau, 1, 0, 1, 256).q, nome_from_tau(tau, 256).q) == 0.0);
    QPoint t = transformed_nome(c("0,1"), 1, 1, 3, 256);
    CHECK(abs(t.q).to_double() == doctest::Approx(std::exp(-M_PI / 3)));
    CHECK(std::atan2(t.q.imag().to_double(), t.q.real().to_double()) == doctest::Approx(2 * M_PI / 3));
    QPoint t3 = transformed_nome(c("0,1"), 3, 0, 1, 256);
    CHECK(t3.q.real().to_double() == doctest::Approx(std::exp(-3 * M_PI)));
    CHECK_THROWS_AS(transformed_nome(tau, 1, 0, 0, 256), std::invalid_argument);
}

TEST_CASE("theta at q = 0") {
    ThetaValues v = theta_eval(QPoint::from_nome(c("0,0"), 128));
    CHECK(v.theta2.is_zero());
    CHECK(dist(v.theta3, c("1,0")) == 0.0);
    CHECK(dist(v.theta4, c("1,0")) == 0.0);
}

TEST_CASE("theta3 at q = 0.1 against exact rational partial sums") {
    const Precision prec = 128;
    ThetaValues v = theta_eval(QPoint::from_nome(c("0.1,0", prec), prec));
    // Twelve exact terms exceed 128 + 32 bits.
    mpq_class exact = oracle::theta3_partial(mpq_class(1, 10), 12);
    Real ref(prec + kGuardBits);
    mpfr_set_q(ref.get(), exact.get_mpq_t(), MPFR_RNDN);
    CHECK(abs(v.theta3.real() - ref).to_double() < 1e-45);
    CHECK(v.theta3.real().to_string(20).rfind("1.2002000020000002", 0) == 0);
}

TEST_CASE("series agree with triple-product forms on the grid") {
    for (std::string t : {"0,1", "0,2", "0,0.3", "0.1,0.7", "-0.4,1.2", "0.5,0.5"}) {
        const Precision prec = 192;
        QPoint p = nome_from_tau(c(t.c_str(), prec), prec);
        ThetaValues v = theta_eval(p);
        oracle::ThetaProducts ref = oracle::theta_products(p.q, 400, prec + kGuardBits);
        CAPTURE(t);
        CHECK(dist(v.theta3, ref.theta3) < 1e-50);
        CHECK(dist(v.theta4, ref.theta4) < 1e-50);
    }
}

TEST_CASE("purely imaginary tau gives real values") {
    ThetaValues v = theta_eval(nome_from_tau(c("0,1"), 256));
    CHECK(v.theta2.imag().is_zero());
    CHECK(v.theta3.imag().is_zero());
    CHECK(v.theta4.imag().is_zero());
}

TEST_CASE("truncation honesty") {
    for (std::string t : {"0,1", "0,0.3", "0.5,0.5", "0,0.05"}) {
        QPoint p = nome_from_tau(c(t.c_str()), 256);
        ThetaValues v = theta_eval(p);
        ThetaValues more = theta_eval_with_terms(p, v.terms + 5);
        // The bound sits below one ulp, so allow the rounding of the extra additions.
        const Real ulp = Real::exp2(-static_cast<long>(p.working_bits()) + 3, p.working_bits());
        CAPTURE(t);
        CHECK(abs(more.theta3 - v.theta3) <= v.trunc_error_bound + ulp * abs(v.theta3));
        CHECK(abs(more.theta4 - v.theta4) <= v.trunc_error_bound + ulp * abs(v.theta4));
    }
}

TEST_CASE("precision monotonicity") {
    for (std::string t : {"0,1", "0.1,0.7", "-0.4,1.2"}) {
        ThetaValues lo = theta_eval(nome_from_tau(c(t.c_str(), 128), 128));
        ThetaValues hi = theta_eval(nome_from_tau(c(t.c_str(), 256), 256));
        CAPTURE(t);
        CHECK(abs(lo.theta3 - hi.theta3).to_double() < std::ldexp(1.0, -120));
        CHECK(abs(lo.theta2 - hi.theta2).to_double() < std::ldexp(1.0, -120));
    }
}

TEST_CASE("euler product") {
    CHECK(dist(euler_product(QPoint::from_nome(c("0,0"), 128)), c("1,0")) == 0.0);
    Complex f = euler_product(QPoint::from_nome(c("0.1,0", 128), 128));
    CHECK(f.real().to_string(20).rfind("0.89001009999899900000", 0) == 0);
}

TEST_CASE("theta quotients") {
    ThetaQuotients one = theta_quotients(c("0,1"), 1, 256);
    CHECK(dist(one.x, c("1,0")) == 0.0);
    // Large Im(tau): (X, Y) close to (1, 0).
    ThetaQuotients far = theta_quotients(c("0,12"), 3, 128);
    CHECK(dist(far.x, c("1,0", 128)) < 1e-15);
    CHECK(abs(far.y).to_double() < 1e-15);
    CHECK_THROWS_AS(theta_quotients(c("0,1"), 0, 128), std::invalid_argument);
}

#include "thetamod/thetaeval.hpp"

#include <cmath>
#include <stdexcept>

namespace thetamod {

namespace {

Complex one(Precision p) { return {Real(1L, p), Real(p)}; }

// 2 |q|^e / (1 - |q|) evaluated in MPFR; `e` may be fractional (theta2 tails).
Real geometric_tail(const Real& abs_q, const Real& log_abs_q, double e, Precision p) {
    if (abs_q.is_zero()) return Real(p);
    Real power = exp(log_abs_q * Real(e, p));
    return Real(2L, p) * power / (Real(1L, p) - abs_q);
}

struct Cutoffs {
    std::uint64_t n3 = 0;  // theta3/theta4: nu = 1..n3
    std::uint64_t n2 = 0;  // theta2: nu = 0..n2
    Real bound;
};

Cutoffs choose_cutoffs(const QPoint& point) {
    const Precision wp = point.working_bits();
    Real abs_q = abs(point.q);
    Cutoffs c{0, 0, Real(wp)};
    if (abs_q.is_zero()) return c;
    Real log_abs_q = log(abs_q);
    const Real eps = Real::exp2(-static_cast<long>(wp), wp);

    // Double-precision estimate, then confirm (and adjust) against the MPFR bound.
    const double l2 = log_abs_q.to_double() / std::log(2.0);
    const double slack = -std::log2(1.0 - abs_q.to_double()) + 1.0;
    const double need = (static_cast<double>(wp) + slack) / -l2;
    auto start = static_cast<std::uint64_t>(std::max(0.0, std::floor(std::sqrt(need)) - 2.0));

    std::uint64_t n = start;
    while (!(geometric_tail(abs_q, log_abs_q, std::pow(static_cast<double>(n + 1), 2), wp) < eps)) ++n;
    c.n3 = n;
    Real tail3 = geometric_tail(abs_q, log_abs_q, std::pow(static_cast<double>(n + 1), 2), wp);

    n = start;
    while (!(geometric_tail(abs_q, log_abs_q, std::pow(static_cast<double>(n) + 1.5, 2), wp) < eps)) ++n;
    c.n2 = n;
    Real tail2 = geometric_tail(abs_q, log_abs_q, std::pow(static_cast<double>(n) + 1.5, 2), wp);

    c.bound = max(tail3, tail2);
    return c;
}

ThetaValues sum_series(const QPoint& point, std::uint64_t n3, std::uint64_t n2) {
    const Precision wp = point.working_bits();
    const Complex& q = point.q;
    const Complex q2 = q * q;

    // theta3, theta4: q^(nu^2) = q^((nu-1)^2) * q^(2nu-1)
    Complex s3(wp), s4(wp);
    Complex power = one(wp);
    Complex step = q;
    for (std::uint64_t nu = 1; nu <= n3; ++nu) {
        power *= step;
        s3 += power;
        if (nu % 2 == 1) {
            s4 -= power;
        } else {
            s4 += power;
        }
        step *= q2;
    }
    const Real two(2L, wp);
    Complex theta3 = one(wp) + s3 * two;
    Complex theta4 = one(wp) + s4 * two;

    // theta2 = 2 q^(1/4) sum q^(nu(nu+1)), q^(nu(nu+1)) = q^((nu-1)nu) * q^(2nu)
    Complex s2 = one(wp);
    power = one(wp);
    step = q2;
    for (std::uint64_t nu = 1; nu <= n2; ++nu) {
        power *= step;
        s2 += power;
        step *= q2;
    }
    Complex theta2 = point.quarter_q * s2 * two;
    return {std::move(theta2), std::move(theta3), std::move(theta4), Real(wp), n3};
}

}  // namespace

QPoint QPoint::from_nome(const Complex& q, Precision precision_bits) {
    if (precision_bits < 2) throw std::invalid_argument("precision_bits too small");
    const Precision wp = precision_bits + kGuardBits;
    Complex qw = q.with_precision(wp);
    if (!(abs(qw) < Real(1L, wp))) throw std::domain_error("nome must satisfy |q| < 1");
    Complex quarter(wp);
    if (!qw.is_zero()) quarter = exp(log(qw) * Real(0.25, wp));
    return {std::nullopt, std::move(qw), std::move(quarter), precision_bits};
}

QPoint nome_from_tau(const Complex& tau, Precision precision_bits) {
    const Precision wp = precision_bits + kGuardBits;
    Complex t = tau.with_precision(wp);
    if (t.imag().sign() <= 0) throw std::domain_error("tau must lie in the upper half-plane (Im(tau) > 0)");
    Complex q = exp_i_pi(t);
    Complex quarter = exp_i_pi(t * Real(0.25, wp));
    return {std::move(t), std::move(q), std::move(quarter), precision_bits};
}

QPoint transformed_nome(const Complex& tau, std::int64_t u, std::int64_t v, std::int64_t w, Precision precision_bits) {
    if (w == 0) throw std::invalid_argument("w must be nonzero");
    const Precision wp = precision_bits + kGuardBits;
    Complex t = tau.with_precision(wp);
    if (t.imag().sign() <= 0) throw std::domain_error("tau must lie in the upper half-plane (Im(tau) > 0)");
    Complex shifted = t * Real(static_cast<long>(u), wp) + Complex(Real(static_cast<long>(2 * v), wp), Real(wp));
    return nome_from_tau(shifted / Real(static_cast<long>(w), wp), precision_bits);
}

ThetaValues theta_eval(const QPoint& point) {
    Cutoffs c = choose_cutoffs(point);
    ThetaValues v = sum_series(point, c.n3, c.n2);
    v.trunc_error_bound = std::move(c.bound);
    return v;
}

ThetaValues theta_eval_with_terms(const QPoint& point, std::uint64_t terms) {
    return sum_series(point, terms, terms);
}

Complex theta3(const QPoint& point) {
    Cutoffs c = choose_cutoffs(point);
    return sum_series(point, c.n3, 0).theta3;
}

Complex euler_product(const QPoint& point) {
    const Precision wp = point.working_bits();
    Real abs_q = abs(point.q);
    Complex result = one(wp);
    if (abs_q.is_zero()) return result;
    const Real eps = Real::exp2(-static_cast<long>(wp), wp);
    const Real denom = Real(1L, wp) - abs_q;

    // Smallest L with |q|^(L+1) / (1 - |q|) < eps.
    Real tail = abs_q / denom;
    Complex power = one(wp);
    for (;;) {
        power *= point.q;
        result *= one(wp) - power;
        tail *= abs_q;
        if (tail < eps) break;
    }
    return result;
}

ThetaQuotients theta_quotients(const Complex& tau, std::uint64_t n, Precision precision_bits) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    ThetaValues base = theta_eval(nome_from_tau(tau, precision_bits));
    const Precision wp = precision_bits + kGuardBits;
    if (abs(base.theta3) < Real::exp2(-static_cast<long>(precision_bits), wp)) {
        throw std::domain_error("theta3(tau) vanishes at working precision");
    }
    Complex t3_4 = pow(base.theta3, 4);
    Complex x = n == 1 ? one(wp)
                       : pow(theta3(transformed_nome(tau, static_cast<std::int64_t>(n), 0, 1, precision_bits)), 4) / t3_4;
    Complex y = pow(base.theta2, 4) / t3_4;
    Real nn(static_cast<long>(n), wp);
    Complex h = x * (nn * nn);
    return {std::move(x), std::move(y), std::move(h)};
}

}  // namespace thetamod

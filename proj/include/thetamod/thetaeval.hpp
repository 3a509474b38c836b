#pragma once

// Arbitrary-precision theta constants and the Euler product at a nome.
//
// All series are summed at precision_bits + kGuardBits and truncated as soon
// as the geometric tail bound drops below 2^-(precision_bits + kGuardBits).
// Nomes of transformed arguments are always built from tau, never as
// fractional powers of q.

#include "thetamod/mpreal.hpp"

#include <cstdint>
#include <optional>

namespace thetamod {

inline constexpr Precision kGuardBits = 32;

struct QPoint {
    std::optional<Complex> tau;
    Complex q;
    // q^(1/4), taken as exp(i*pi*tau/4) when tau is known, else the principal root.
    Complex quarter_q;
    Precision precision_bits = 256;

    Precision working_bits() const { return precision_bits + kGuardBits; }

    // Direct nome input; throws std::domain_error unless |q| < 1.
    static QPoint from_nome(const Complex& q, Precision precision_bits);
};

// q = exp(i*pi*tau); throws std::domain_error unless Im(tau) > 0.
QPoint nome_from_tau(const Complex& tau, Precision precision_bits);

// Nome of (u*tau + 2v)/w.
QPoint transformed_nome(const Complex& tau, std::int64_t u, std::int64_t v, std::int64_t w, Precision precision_bits);

struct ThetaValues {
    Complex theta2;
    Complex theta3;
    Complex theta4;
    // Bound on the dropped series tails (max over the three series).
    Real trunc_error_bound;
    // Highest nu kept in the theta3/theta4 sums.
    std::uint64_t terms = 0;
};

ThetaValues theta_eval(const QPoint& point);

// theta3 alone, with the same truncation rule.
Complex theta3(const QPoint& point);

// Partial sums with an explicit cutoff, bypassing the truncation rule.
ThetaValues theta_eval_with_terms(const QPoint& point, std::uint64_t terms);

// prod_{l >= 1} (1 - q^l), truncated when |q|^(L+1)/(1-|q|) < 2^-(precision_bits + guard).
Complex euler_product(const QPoint& point);

struct ThetaQuotients {
    Complex x;  // theta3^4(n tau) / theta3^4(tau)
    Complex y;  // lambda = theta2^4(tau) / theta3^4(tau)
    Complex h;  // n^2 * x
};

// Throws std::domain_error when theta3(tau) vanishes at working precision.
ThetaQuotients theta_quotients(const Complex& tau, std::uint64_t n, Precision precision_bits);

}  // namespace thetamod

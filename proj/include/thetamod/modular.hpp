#pragma once

// Modular polynomials Q_n with Q_n(theta3^4(n tau)/theta3^4(tau), theta2^4/theta3^4) = 0.
//
// Odd n = m comes from a seed polynomial P_m (arguments h_3 = m^2 theta3^4(m tau)/theta3^4
// and 16 lambda) through Q_m(X, Y) = P_m(m^2 X, 16 Y). Each doubling step turns a
// polynomial for n into one for 2n:
//
//   B(X,Y)  = sum 4^nu a_{nu,mu} X^{4nu} (1-Y^2)^{2mu} (1+Y^2)^{2(budget-nu-mu)}
//           = D(X^4, Y^4) + Y^2 E(X^4, Y^4)
//   Q~(X,Y) = D(X,Y)^2 - Y E(X,Y)^2
//   Q'(X,Y) = Q~(X, 1-Y)
//
// Powers of two are not constructed; their polynomials (in theta3^2(n tau)/theta3^2
// and theta4/theta3) are provided as fixtures only.

#include "thetamod/polyring.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetamod {

class missing_seed_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SeedRecord {
    std::uint64_t m = 0;
    SparsePoly P{std::vector<std::string>{"X", "Y"}};
    std::string provenance;
};

// P_3 and P_5.
std::vector<SeedRecord> builtin_seeds();

// P_n for n in {2, 4, 8, 16}, variables (X, Y).
SparsePoly power_of_two_fixture(std::uint64_t n);

// 27X^8 - 18X^4Z^4 - 64X^2Y^4Z^2 + 64X^2Y^2Z^4 - 8X^2Z^6 - Z^8, vanishing at
// (theta3(3tau), theta3(2tau), theta3(tau)).
SparsePoly homogeneous_relation();

struct EliminationResult {
    SparsePoly resultant;  // over (X, Y, Z)
    unsigned multiplicity = 0;
    SparsePoly cofactor;  // resultant / relation^multiplicity
};

// Eliminates W = theta4 between Z^16 Q_3(X^4/Z^4, (Z^4 - W^4)/Z^4) and
// 2Y^2 - W^2 - Z^2 over (X, Y, Z, W), then divides out homogeneous_relation()
// as often as it goes exactly.
EliminationResult homogeneous_elimination();

// Structural seed checks: variables (X, Y), deg_X P = psi(m), P(0, Y) = constant_term(m).
// Throws std::invalid_argument naming the failed condition.
void validate_seed(const SeedRecord& seed);

// Largest residual of P_m(h_3(tau), 16 lambda(tau)) / scale over a few sample points.
Real seed_residual(const SeedRecord& seed, Precision precision_bits);

// Reads a polynomial JSON file plus its sidecar "<stem>.meta.json"
// ({"m":..,"normalization":"theoremD","provenance":..}), then validates the
// seed structurally and numerically.
SeedRecord load_seed_file(const std::filesystem::path& path);

// Q_m(X, Y) = P_m(m^2 X, 16 Y).
SparsePoly rescale_seed(const SeedRecord& seed);

struct DoubleStep {
    SparsePoly B;
    SparsePoly D;
    SparsePoly E;
    SparsePoly Qtilde;
    SparsePoly Q;
    std::uint64_t budget = 0;  // exponent budget of the produced Q (twice the input one)
    BigInt c;                  // square of the input constant
};

// One doubling step. `budget` bounds nu + mu over the monomials of Q and is
// used verbatim in the (1+Y^2) exponent even when Q's total degree is lower.
// Throws std::invalid_argument for a monomial with nu + mu > budget.
DoubleStep double_step(const SparsePoly& Q, std::uint64_t budget, const BigInt& c);

// Qtilde(X^4, Y^4) == B(X, Y) * B(X, iY), i.e. (D + Y^2 E)(D - Y^2 E) at (X^4, Y^4).
bool factorization_audit(const DoubleStep& step);

struct ConstructionResult {
    std::uint64_t n = 0;
    std::uint64_t alpha = 0;
    std::uint64_t m = 0;
    BigInt c;  // P_m(0, Y)
    SparsePoly Q{std::vector<std::string>{"X", "Y"}};
    std::vector<DoubleStep> steps;  // filled only in audit mode
};

// Q_n for n = 2^alpha m, m odd >= 3. `extra_seeds` take precedence over the
// built-in ones. Throws missing_seed_error when no seed for m is available and
// std::invalid_argument for n < 2 or n a power of two.
ConstructionResult build_qn(std::uint64_t n, const std::vector<SeedRecord>& extra_seeds = {}, bool audit = false);

// Q(0, Y) == c * Y^degree.
bool satisfies_leading_law(const SparsePoly& Q, const BigInt& c, std::uint64_t degree);

// deg R_j(X) <= degree - j for every Y^j column, i.e. a + j <= degree on each X^a Y^j.
bool satisfies_column_degree_law(const SparsePoly& Q, std::uint64_t degree);

}  // namespace thetamod

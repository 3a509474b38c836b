#pragma once

// Numerical certification of theta-constant identities.
//
// Every check evaluates both sides of an identity at a sample point and
// reports a residual against tolerance = scale * 2^-(precision_bits - guard - slack).

#include "thetamod/modular.hpp"
#include "thetamod/mpreal.hpp"
#include "thetamod/polyring.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace thetamod {

inline constexpr Precision kToleranceSlackBits = 16;

enum class Verdict { pass, fail };

struct ResidualReport {
    std::string identity;
    std::string sample;
    double residual = 0.0;
    double scale = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::fail;
    Precision precision_bits = 0;

    bool passed() const { return verdict == Verdict::pass; }
};

// scale * 2^-(precision_bits - kGuardBits - kToleranceSlackBits)
Real tolerance_for(const Real& scale, Precision precision_bits);

// Verdict is pass iff residual <= tolerance.
ResidualReport make_report(std::string identity, std::string sample, const Real& residual, const Real& scale,
                           Precision precision_bits);

// Q_n(theta3^4(n tau)/theta3^4, theta2^4/theta3^4). Q_1 is X - 1; odd n use the
// rescaled seed, even n the doubling construction. Throws missing_seed_error
// or std::invalid_argument (powers of two) when no polynomial exists.
ResidualReport check_qn_vanishing(std::uint64_t n, const Complex& tau, Precision precision_bits,
                                  const std::vector<SeedRecord>& seeds = {});
ResidualReport check_qn_vanishing(const SparsePoly& Q, std::uint64_t n, const Complex& tau, Precision precision_bits);

// P_n(theta3^2(n tau)/theta3^2, theta4/theta3) for n in {2, 4, 8, 16}.
ResidualReport check_power_of_two_fixture(std::uint64_t n, const Complex& tau, Precision precision_bits);

// prod over triplets of theta3((u tau + 2v)/w) against theta3(tau)^psi(n), relative.
// Odd n only; even n throws std::invalid_argument.
ResidualReport check_product_formula(std::uint64_t n, const Complex& tau, Precision precision_bits);

// prod_{k < p^j} theta3(zeta_{p^j}^k q) against theta3^{b_{j+1}}(q^{p^j}) / theta3^{b_j}(q^{p^{j+1}}),
// relative. Requires p an odd prime, j >= 1, p^j <= 27.
ResidualReport check_root_of_unity_product(std::uint64_t p, unsigned j, const Complex& tau, Precision precision_bits);

// The degree-8 relation at (theta3(3tau), theta3(2tau), theta3(tau)).
ResidualReport check_homogeneous_relation(const Complex& tau, Precision precision_bits);

// theta3^4 = theta2^4 + theta4^4.
ResidualReport check_jacobi_identity(const Complex& tau, Precision precision_bits);

// 2 theta2^2(2tau) = theta3^2 - theta4^2 and 2 theta3^2(2tau) = theta3^2 + theta4^2 (worse of the two).
ResidualReport check_duplication(const Complex& tau, Precision precision_bits);

// theta3(q) F(q)^2 F(q^4)^2 = F(q^2)^5, relative.
ResidualReport check_triple_product(const Complex& tau, Precision precision_bits);

// 0.0+1.0i, 0.0+2.0i, 0.0+0.3i, 0.1+0.7i, -0.4+1.2i, 0.5+0.5i as "re,im".
const std::vector<std::string>& default_tau_grid();

struct SuiteConfig {
    Precision precision_bits = 256;
    std::vector<std::string> taus;
    std::vector<std::uint64_t> qn;
    std::vector<std::uint64_t> power_of_two;
    std::vector<std::uint64_t> product;
    std::vector<std::pair<std::uint64_t, unsigned>> root_of_unity;
    bool homogeneous = false;
    bool theta_identities = false;
    std::vector<SeedRecord> seeds;
    unsigned jobs = 1;

    // The full grid over every built-in identity.
    static SuiteConfig defaults();
};

// Runs every configured check for every tau; report order is: theta identities,
// qn, power_of_two, product, root_of_unity, homogeneous, each with tau innermost.
std::vector<ResidualReport> run_suite(const SuiteConfig& config);

// One JSON object per report with fields in fixed order, newline-terminated.
std::string to_json_line(const ResidualReport& report);
std::string summary_json_line(const std::vector<ResidualReport>& reports);

std::string describe_tau(const Complex& tau);

}  // namespace thetamod

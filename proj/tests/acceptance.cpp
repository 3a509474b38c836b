// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thetamod/modular.hpp"
#include "thetamod/numtheory.hpp"
#include "thetamod/thetaeval.hpp"
#include "thetamod/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace thetamod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d  %s  [%s]\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

std::vector<Complex> grid(Precision prec) {
    std::vector<Complex> out;
    for (const auto& t : default_tau_grid()) out.push_back(Complex::parse_pair(t, prec + kGuardBits));
    return out;
}

// Largest residual/scale over a batch, and whether every entry stays below scale * 2^-bits.
struct Worst {
    bool ok = true;
    double log2_ratio = -INFINITY;
    std::size_t count = 0;

    void add(const ResidualReport& r, int bits) {
        ++count;
        const double bound = r.scale * std::ldexp(1.0, -bits);
        ok = ok && r.residual < bound;
        if (r.residual > 0) log2_ratio = std::max(log2_ratio, std::log2(r.residual / r.scale));
    }
    std::string describe() const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%zu checks, worst log2(residual/scale) = %.1f", count, log2_ratio);
        return buf;
    }
};

}  // namespace

int main() {
    const Precision prec = 256;
    const std::vector<std::string> XY{"X", "Y"};

    criterion(1, "build n=6 reproduces the reference B_6 and Q_6 in audit mode, under 1 s", [&] {
        auto t0 = Clock::now();
        ConstructionResult r = build_qn(6, {}, true);
        const double s = seconds_since(t0);
        const bool b6 = r.steps.size() == 1 && r.steps[0].B == fixtures::b6();
        const bool q6 = r.Q == fixtures::q6();
        const bool audit = r.steps.size() == 1 && factorization_audit(r.steps[0]);
        return Outcome{b6 && q6 && audit && s < 1.0, "B_6 " + std::string(b6 ? "equal" : "DIFFERENT") + ", Q_6 " +
                                                         (q6 ? "equal" : "DIFFERENT") + ", " + std::to_string(s) + " s"};
    });

    criterion(2, "rescaled P_3 equals the reference Q_3", [&] {
        const bool eq = rescale_seed(builtin_seeds()[0]) == fixtures::q3();
        return Outcome{eq, eq ? "exact" : "different"};
    });

    criterion(3, "Q(0,Y) = c^(2^a) Y^(2^a psi(m)) for m in {3,5}, a in {1,2,3}", [&] {
        int good = 0;
        for (std::uint64_t m : {3, 5}) {
            for (unsigned a = 1; a <= 3; ++a) {
                BigInt lead;
                const BigInt c = constant_term(m);
                mpz_pow_ui(lead.get_mpz_t(), c.get_mpz_t(), 1UL << a);
                good += satisfies_leading_law(build_qn(m << a).Q, lead, (1UL << a) * psi(m)) ? 1 : 0;
            }
        }
        return Outcome{good == 6, std::to_string(good) + "/6 cases"};
    });

    criterion(4, "Q_n vanishes on the tau grid below scale*2^-208 at 256 bits, under 60 s", [&] {
        auto t0 = Clock::now();
        Worst w;
        for (std::uint64_t n : {3, 5, 6, 10, 12, 20, 24}) {
            const SparsePoly Q = build_qn(n).Q;
            for (const auto& t : grid(prec)) w.add(check_qn_vanishing(Q, n, t, prec), 208);
        }
        const double s = seconds_since(t0);
        return Outcome{w.ok && s < 60.0, w.describe() + ", " + std::to_string(s) + " s"};
    });

    criterion(5, "power-of-two fixtures P_2, P_4, P_8, P_16 vanish on the grid", [&] {
        Worst w;
        for (std::uint64_t n : {2, 4, 8, 16}) {
            for (const auto& t : grid(prec)) w.add(check_power_of_two_fixture(n, t, prec), 208);
        }
        return Outcome{w.ok, w.describe()};
    });

    criterion(6, "product formula for n in {3,5,9,15}: relative residual < 2^-200", [&] {
        Worst w;
        for (std::uint64_t n : {3, 5, 9, 15}) {
            for (const auto& t : grid(prec)) w.add(check_product_formula(n, t, prec), 200);
        }
        return Outcome{w.ok, w.describe()};
    });

    criterion(7, "root-of-unity products (3,1), (5,1), (3,2): relative residual < 2^-200", [&] {
        Worst w;
        for (auto [p, j] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
            for (const auto& t : grid(prec)) w.add(check_root_of_unity_product(p, j, t, prec), 200);
        }
        return Outcome{w.ok, w.describe()};
    });

    criterion(8, "homogeneous relation vanishes on the grid and is homogeneous of degree 8", [&] {
        Worst w;
        for (const auto& t : grid(prec)) w.add(check_homogeneous_relation(t, prec), 208);
        bool homogeneous = true;
        const SparsePoly P = homogeneous_relation();
        for (const auto& [m, c] : P.terms()) homogeneous = homogeneous && m[0] + m[1] + m[2] == 8;
        EliminationResult e = homogeneous_elimination();
        const bool derived = e.multiplicity >= 1;
        return Outcome{w.ok && homogeneous && derived,
                       w.describe() + ", homogeneous " + (homogeneous ? "yes" : "NO") +
                           ", elimination multiplicity " + std::to_string(e.multiplicity)};
    });

    criterion(9, "constant_term(15), omega for a,b <= 60, triplet counts for n <= 200", [&] {
        const bool ct = constant_term(15) == mpz_class("207594140625");
        int omega_bad = 0;
        for (std::uint64_t a = 1; a <= 60; ++a) {
            for (std::uint64_t b = 1; b <= 60; ++b) omega_bad += omega(a, b) != oracle::omega(a, b) ? 1 : 0;
        }
        int trip_bad = 0;
        for (std::uint64_t n = 1; n <= 200; ++n) {
            trip_bad += enumerate_triplets(n).size() != psi(n) || oracle::triplets(n).size() != psi(n) ? 1 : 0;
        }
        return Outcome{ct && omega_bad == 0 && trip_bad == 0,
                       "constant_term(15) = " + constant_term(15).get_str() + ", omega mismatches " +
                           std::to_string(omega_bad) + ", triplet mismatches " + std::to_string(trip_bad)};
    });

    criterion(10, "property suites: ring axioms, theta identities, factorization audit, precision monotonicity", [&] {
        std::mt19937_64 rng(10);
        const std::vector<std::string> XYZ{"X", "Y", "Z"};
        std::uniform_int_distribution<int> pt(-9, 9);
        int ring_bad = 0;
        for (int i = 0; i < 1000; ++i) {
            SparsePoly a = oracle::random_poly(rng, XYZ, 6, 5);
            SparsePoly b = oracle::random_poly(rng, XYZ, 6, 5);
            SparsePoly c = oracle::random_poly(rng, XYZ, 6, 5);
            std::vector<Rational> point{pt(rng), pt(rng), pt(rng)};
            const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) &&
                            a * b == b * a && a * (b + c) == a * b + a * c &&
                            eval_exact(a * b, point) == eval_exact(a, point) * eval_exact(b, point);
            ring_bad += ok ? 0 : 1;
        }

        Worst theta;
        for (const auto& t : grid(prec)) {
            theta.add(check_jacobi_identity(t, prec), 208);
            theta.add(check_duplication(t, prec), 208);
            theta.add(check_triple_product(t, prec), 208);
        }

        int audit_bad = 0;
        for (std::uint64_t n : {6, 12, 24, 10, 20, 40}) {
            for (const auto& s : build_qn(n, {}, true).steps) audit_bad += factorization_audit(s) ? 0 : 1;
        }

        SuiteConfig hi = SuiteConfig::defaults();
        SuiteConfig lo = SuiteConfig::defaults();
        lo.precision_bits = 128;
        auto rh = run_suite(hi);
        auto rl = run_suite(lo);
        int mono_bad = rh.size() == rl.size() ? 0 : 1;
        for (std::size_t i = 0; i < std::min(rh.size(), rl.size()); ++i) {
            // Rounding floor of the 256-bit run: a 128-bit run may cancel to exactly 0.
            const double floor = rh[i].scale * std::ldexp(1.0, -static_cast<int>(hi.precision_bits));
            mono_bad += rh[i].verdict == rl[i].verdict && rh[i].residual <= std::max(rl[i].residual, floor) ? 0 : 1;
        }

        return Outcome{ring_bad == 0 && theta.ok && audit_bad == 0 && mono_bad == 0,
                       "ring failures " + std::to_string(ring_bad) + "/1000, theta identities " + theta.describe() +
                           ", audit failures " + std::to_string(audit_bad) + ", monotonicity violations " +
                           std::to_string(mono_bad) + "/" + std::to_string(rh.size())};
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}

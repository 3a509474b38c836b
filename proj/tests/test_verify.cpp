#include "fixtures.hpp"
#include "thetamod/numtheory.hpp"
#include "thetamod/thetaeval.hpp"
#include "thetamod/verify.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cmath>

using namespace thetamod;

namespace {

Complex tau(const char* s, Precision p = 256) { return Complex::parse_pair(s, p + kGuardBits); }

}  // namespace

TEST_CASE("tolerance and verdict") {
    Real scale(8L, 256);
    CHECK(tolerance_for(scale, 256) == Real::exp2(3 - 208, 256));
    ResidualReport r = make_report("x", "y", Real::exp2(-300, 256), scale, 256);
    CHECK(r.passed());
    ResidualReport f = make_report("x", "y", Real(1L, 256), scale, 256);
    CHECK_FALSE(f.passed());
}

TEST_CASE("qn vanishing") {
    ResidualReport r3 = check_qn_vanishing(3, tau("0,1"), 256);
    CHECK(r3.passed());
    CHECK(r3.residual < 1e-50 * r3.scale);
    CHECK(check_qn_vanishing(6, tau("0.1,0.7"), 256).passed());
    CHECK(check_qn_vanishing(1, tau("0,1"), 256).residual == 0.0);
    CHECK_THROWS_AS(check_qn_vanishing(7, tau("0,1"), 256), missing_seed_error);
    CHECK_THROWS_AS(check_qn_vanishing(4, tau("0,1"), 256), std::invalid_argument);
    // A perturbed polynomial must fail.
    SparsePoly wrong = fixtures::q6() + SparsePoly::constant(fixtures::xy(), 1);
    CHECK_FALSE(check_qn_vanishing(wrong, 6, tau("0,1"), 256).passed());
}

TEST_CASE("power-of-two fixtures") {
    CHECK(check_power_of_two_fixture(2, tau("0,1"), 256).passed());
    CHECK(check_power_of_two_fixture(4, tau("0,2"), 256).passed());
    CHECK(check_power_of_two_fixture(16, tau("0,1"), 256).passed());
    CHECK_THROWS_AS(check_power_of_two_fixture(32, tau("0,1"), 256), std::invalid_argument);
}

TEST_CASE("product formula") {
    ResidualReport one = check_product_formula(1, tau("0,1"), 256);
    CHECK(one.residual == 0.0);
    CHECK(check_product_formula(3, tau("0,1"), 256).passed());
    CHECK(check_product_formula(15, tau("0,1"), 256).passed());
    CHECK(enumerate_triplets(15).size() == 24);
    CHECK_THROWS_AS(check_product_formula(4, tau("0,1"), 256), std::invalid_argument);
}

TEST_CASE("root-of-unity products") {
    CHECK(check_root_of_unity_product(3, 1, tau("0,1"), 256).passed());
    CHECK(check_root_of_unity_product(5, 1, tau("0,1"), 256).passed());
    CHECK(check_root_of_unity_product(3, 2, tau("0,0.3"), 256).passed());
    CHECK_THROWS_AS(check_root_of_unity_product(2, 1, tau("0,1"), 256), std::invalid_argument);
    CHECK_THROWS_AS(check_root_of_unity_product(3, 0, tau("0,1"), 256), std::invalid_argument);
    CHECK_THROWS_AS(check_root_of_unity_product(3, 4, tau("0,1"), 256), std::invalid_argument);
}

TEST_CASE("homogeneous relation") {
    CHECK(check_homogeneous_relation(tau("0,1"), 256).passed());
    CHECK(check_homogeneous_relation(tau("0.5,0.5"), 256).passed());
}

TEST_CASE("a one-monomial variant of the homogeneous relation does not vanish") {
    // Negative control: -18X^4Y^4 in place of -18X^4Z^4.
    const SparsePoly variant =
        parse_poly("27X^8-18X^4Y^4-64X^2Y^4Z^2+64X^2Y^2Z^4-8X^2Z^6-Z^8", {"X", "Y", "Z"});
    const Complex t = tau("0,1");
    std::vector<Complex> pt{theta3(transformed_nome(t, 3, 0, 1, 256)), theta3(transformed_nome(t, 2, 0, 1, 256)),
                            theta3(nome_from_tau(t, 256))};
    ComplexEvaluation ev = eval_complex(variant, pt, 256 + kGuardBits);
    CHECK(abs(ev.value) > tolerance_for(ev.scale, 256));
}

TEST_CASE("theta identities on the grid") {
    for (const auto& t : default_tau_grid()) {
        CAPTURE(t);
        CHECK(check_jacobi_identity(tau(t.c_str()), 256).passed());
        CHECK(check_duplication(tau(t.c_str()), 256).passed());
        CHECK(check_triple_product(tau(t.c_str()), 256).passed());
    }
}

TEST_CASE("suite") {
    SuiteConfig empty;
    CHECK(run_suite(empty).empty());

    SuiteConfig cfg = SuiteConfig::defaults();
    auto reports = run_suite(cfg);
    const std::size_t per_tau = 3 + 7 + 4 + 4 + 3 + 1;
    CHECK(reports.size() == per_tau * default_tau_grid().size());
    for (const auto& r : reports) {
        CAPTURE(r.identity);
        CAPTURE(r.sample);
        CHECK(r.passed());
        CHECK(r.passed() == (r.residual <= r.tolerance));
    }

    // Deterministic, including under concurrency.
    cfg.jobs = 4;
    auto parallel = run_suite(cfg);
    std::string a, b;
    for (const auto& r : reports) a += to_json_line(r);
    for (const auto& r : parallel) b += to_json_line(r);
    CHECK(a == b);

    // Lower precision: same verdicts; the higher-precision residual is no larger,
    // up to its own rounding floor (a low-precision run can cancel to exactly 0).
    SuiteConfig low = SuiteConfig::defaults();
    low.precision_bits = 64;
    auto coarse = run_suite(low);
    REQUIRE(coarse.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].identity);
        CAPTURE(reports[i].sample);
        CHECK(coarse[i].verdict == reports[i].verdict);
        const double floor = reports[i].scale * std::ldexp(1.0, -256);
        CHECK(reports[i].residual <= std::max(coarse[i].residual, floor));
    }
}

TEST_CASE("report serialization") {
    ResidualReport r = check_qn_vanishing(3, tau("0,1"), 256);
    const std::string line = to_json_line(r);
    CHECK(line.back() == '\n');
    auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::vector<std::string> want{"identity", "sample", "residual", "scale", "tolerance", "verdict", "precision_bits"};
    CHECK(keys == want);
    CHECK(j["verdict"] == "pass");
    CHECK(j["sample"] == "n=3 tau=0,1");
    CHECK(summary_json_line({r}) == "{\"summary\":{\"total\":1,\"passed\":1,\"failed\":0}}\n");
}

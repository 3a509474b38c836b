#include "oracles.hpp"
#include "thetamod/numtheory.hpp"

#include <doctest.h>

using namespace thetamod;

TEST_CASE("psi") {
    CHECK(psi(1) == 1);
    CHECK(psi(3) == 4);
    CHECK(psi(15) == 24);
    CHECK_THROWS(psi(0));
    for (std::uint64_t a = 1; a <= 50; ++a) {
        for (std::uint64_t b = 1; b <= 50; ++b) {
            if (std::gcd(a, b) == 1) REQUIRE(psi(a * b) == psi(a) * psi(b));
        }
    }
}

TEST_CASE("euler_phi against brute force") {
    CHECK(euler_phi(1) == 1);
    for (std::uint64_t n = 1; n <= 300; ++n) REQUIRE(euler_phi(n) == oracle::phi(n));
}

TEST_CASE("omega against the defining sum") {
    CHECK(omega(7, 1) == 1);
    CHECK(omega(3, 5) == 5);
    CHECK(omega(3, 3) == 2);
    CHECK_THROWS(omega(0, 3));
    CHECK_THROWS(omega(3, 0));
    for (std::uint64_t a = 1; a <= 60; ++a) {
        for (std::uint64_t b = 1; b <= 60; ++b) REQUIRE(omega(a, b) == oracle::omega(a, b));
    }
}

TEST_CASE("omega divisor form") {
    CHECK(omega_divisor_form(15, 1) == 15);
    CHECK(omega_divisor_form(15, 3) == 5);
    CHECK(omega_divisor_form(9, 3) == 2);
    CHECK_THROWS_AS(omega_divisor_form(15, 4), std::invalid_argument);
    for (std::uint64_t m = 1; m <= 400; ++m) {
        for (std::uint64_t d : divisors(m)) REQUIRE(omega_divisor_form(m, d) == oracle::omega(d, m / d));
    }
}

TEST_CASE("b_seq") {
    CHECK(b_seq(3, 0) == 0);
    CHECK(b_seq(3, 1) == 1);
    CHECK(b_seq(3, 2) == 4);
    CHECK(b_seq(3, 3) == 13);
    CHECK_THROWS_AS(b_seq(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(b_seq(9, 1), std::invalid_argument);
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        std::uint64_t pl = 1;
        for (unsigned l = 1; l <= 4; ++l) {
            pl *= p;
            REQUIRE(b_seq(p, l + 1) - b_seq(p, l - 1) == psi(pl));
        }
    }
}

TEST_CASE("triplets") {
    auto t3 = enumerate_triplets(3);
    std::vector<Triplet> want{{3, 0, 1}, {1, 0, 3}, {1, 1, 3}, {1, 2, 3}};
    CHECK(t3 == want);
    CHECK(enumerate_triplets(15).size() == 24);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        auto got = enumerate_triplets(n);
        auto ref = oracle::triplets(n);
        REQUIRE(got.size() == psi(n));
        REQUIRE(got.size() == ref.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            REQUIRE(got[i].u == std::get<0>(ref[i]));
            REQUIRE(got[i].v == std::get<1>(ref[i]));
            REQUIRE(got[i].w == std::get<2>(ref[i]));
        }
    }
}

TEST_CASE("constant term") {
    CHECK(constant_term(3) == 9);
    CHECK(constant_term(5) == 25);
    CHECK(constant_term(9) == 6561);
    CHECK(constant_term(15) == mpz_class("207594140625"));
    CHECK_THROWS_AS(constant_term(4), std::invalid_argument);
    CHECK_THROWS_AS(constant_term(1), std::invalid_argument);
    for (std::uint64_t m = 3; m <= 45; m += 2) REQUIRE(constant_term(m) == oracle::constant_term(m));
    // p^a -> p^{2(p^a - 1)/(p - 1)}
    for (auto [p, a] : {std::pair<unsigned, unsigned>{3, 1}, {3, 3}, {5, 2}, {7, 2}}) {
        mpz_class pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), p, 2 * (pa.get_ui() - 1) / (p - 1));
        REQUIRE(constant_term(pa.get_ui()) == expected);
    }
}

TEST_CASE("factorization helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    std::vector<std::pair<std::uint64_t, unsigned>> f360{{2, 3}, {3, 2}, {5, 1}};
    CHECK(factorize(360) == f360);
    std::vector<std::uint64_t> d12{1, 2, 3, 4, 6, 12};
    CHECK(divisors(12) == d12);
}

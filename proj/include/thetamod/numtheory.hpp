#pragma once

// Arithmetic functions behind the theta product formula and the constant
// terms of the seed polynomials. Arguments are 64-bit; results that can
// outgrow 64 bits are returned as big integers.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace thetamod {

// A factor theta3((u*tau + 2v)/w) of the product formula for n = u*w.
struct Triplet {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::uint64_t w = 0;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Dedekind psi: n * prod_{p | n} (1 + 1/p).
std::uint64_t psi(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Number of 0 <= k < b with gcd(a, b, k) = 1, via (b / gcd(a,b)) * phi(gcd(a,b)).
std::uint64_t omega(std::uint64_t a, std::uint64_t b);

// omega(d, m/d) from the prime-exponent closed form; d must divide m.
std::uint64_t omega_divisor_form(std::uint64_t m, std::uint64_t d);

// (p^j - 1) / (p - 1) for an odd prime p.
std::uint64_t b_seq(std::uint64_t p, unsigned j);

// All (u, v, w) with gcd(u, v, w) = 1, u*w = n, 0 <= v < w; ordered by w, then v.
std::vector<Triplet> enumerate_triplets(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

// P_m(0, Y) for odd m >= 3. Computed as prod u^2 over the triplets and as
// (prod_{d | m} d^omega(d, m/d))^2; a mismatch throws std::logic_error.
mpz_class constant_term(std::uint64_t m);

}  // namespace thetamod

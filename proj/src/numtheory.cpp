#include "thetamod/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace thetamod {

namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + " must be a positive integer");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("result exceeds 64 bits");
    return r;
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    require_positive(n, "n");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1U);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

std::uint64_t psi(std::uint64_t n) {
    require_positive(n, "n");
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = checked_mul(r / p, p + 1);
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n, "n");
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::uint64_t omega(std::uint64_t a, std::uint64_t b) {
    require_positive(a, "a");
    require_positive(b, "b");
    const std::uint64_t g = std::gcd(a, b);
    return b / g * euler_phi(g);
}

std::uint64_t omega_divisor_form(std::uint64_t m, std::uint64_t d) {
    require_positive(m, "m");
    require_positive(d, "d");
    if (m % d != 0) throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(m));
    // prod p^(alpha - beta) is m/d; each prime with min(beta, alpha - beta) > 0
    // contributes a factor (1 - 1/p).
    std::uint64_t r = m / d;
    for (auto [p, alpha] : factorize(m)) {
        unsigned beta = 0;
        for (std::uint64_t t = d; t % p == 0; t /= p) ++beta;
        if (std::min(beta, alpha - beta) > 0) r = r / p * (p - 1);
    }
    return r;
}

std::uint64_t b_seq(std::uint64_t p, unsigned j) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    std::uint64_t power = 1;
    for (unsigned i = 0; i < j; ++i) power = checked_mul(power, p);
    return (power - 1) / (p - 1);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    require_positive(n, "n");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Triplet> enumerate_triplets(std::uint64_t n) {
    require_positive(n, "n");
    std::vector<Triplet> out;
    for (std::uint64_t w : divisors(n)) {
        const std::uint64_t u = n / w;
        const std::uint64_t uw_gcd = std::gcd(u, w);
        for (std::uint64_t v = 0; v < w; ++v) {
            if (std::gcd(uw_gcd, v) == 1) out.push_back({u, v, w});
        }
    }
    return out;
}

mpz_class constant_term(std::uint64_t m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("constant_term needs an odd m >= 3");
    mpz_class from_triplets = 1;
    for (const auto& t : enumerate_triplets(m)) from_triplets *= mpz_class(t.u) * mpz_class(t.u);

    mpz_class from_divisors = 1;
    for (std::uint64_t d : divisors(m)) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), d, omega(d, m / d));
        from_divisors *= term;
    }
    from_divisors *= from_divisors;

    if (from_triplets != from_divisors) {
        throw std::logic_error("constant term closed forms disagree for m = " + std::to_string(m));
    }
    return from_triplets;
}

}  // namespace thetamod

#include "thetamod/modular.hpp"

#include "thetamod/numtheory.hpp"
#include "thetamod/thetaeval.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace thetamod {

namespace {

const std::vector<std::string> kXY{"X", "Y"};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t odd_part(std::uint64_t n, std::uint64_t& alpha) {
    alpha = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++alpha;
    }
    return n;
}

// X^4 and Y^4 substituted into a polynomial in (X, Y).
SparsePoly inflate4(const SparsePoly& p) {
    SparsePoly r(p.variables());
    for (const auto& [m, c] : p.terms()) {
        Monomial out{};
        out[0] = 4 * m[0];
        out[1] = 4 * m[1];
        r.add_term(out, c);
    }
    return r;
}

}  // namespace

std::vector<SeedRecord> builtin_seeds() {
    return {
        {3, parse_poly("9-(28-16Y+Y^2)X+30X^2-12X^3+X^4", kXY), "built-in P_3 (arguments h_3, 16*lambda)"},
        {5,
         parse_poly("25-(126-832Y+308Y^2-32Y^3+Y^4)X+(255+1920Y-120Y^2)X^2"
                    "+(-260+320Y-20Y^2)X^3+135X^4-30X^5+X^6",
                    kXY),
         "built-in P_5 (arguments h_3, 16*lambda)"},
    };
}

SparsePoly power_of_two_fixture(std::uint64_t n) {
    switch (n) {
        case 2:
            return parse_poly("2X-Y^2-1", kXY);
        case 4:
            return parse_poly("4X-(1+Y)^2", kXY);
        case 8:
            return parse_poly("64X^2-16(1+Y)^2X+(1-Y)^4", kXY);
        case 16:
            return parse_poly("65536X^4-16384(1+Y)^2X^3+512(3Y^4+4Y^3+18Y^2+4Y+3)X^2"
                              "-64(1+Y)^2(Y^4+28Y^3+6Y^2+28Y+1)X+(1-Y)^8",
                              kXY);
        default:
            throw std::invalid_argument("no power-of-two fixture for n = " + std::to_string(n) +
                                        " (available: 2, 4, 8, 16)");
    }
}

SparsePoly homogeneous_relation() {
    return parse_poly("27X^8-18X^4Z^4-64X^2Y^4Z^2+64X^2Y^2Z^4-8X^2Z^6-Z^8", {"X", "Y", "Z"});
}

EliminationResult homogeneous_elimination() {
    const std::vector<std::string> vars{"X", "Y", "Z", "W"};
    const SparsePoly Q3 = rescale_seed(builtin_seeds().front());
    const SparsePoly Z4 = pow(SparsePoly::variable(vars, "Z"), 4);
    const SparsePoly lam = Z4 - pow(SparsePoly::variable(vars, "W"), 4);
    const auto degree = Q3.total_degree().value();

    SparsePoly A(vars);
    for (const auto& [m, a] : Q3.terms()) {
        Monomial x{};
        x[0] = 4 * m[0];
        A += SparsePoly::term(vars, x, a) * pow(lam, m[1]) * pow(Z4, static_cast<unsigned>(degree - m[0] - m[1]));
    }
    const SparsePoly B = parse_poly("2Y^2-W^2-Z^2", vars);

    EliminationResult r{drop_variable(resultant(A, B, "W"), "W"), 0, SparsePoly(kXY)};
    const SparsePoly relation = homogeneous_relation();
    r.cofactor = r.resultant;
    while (auto q = divide_exact(r.cofactor, relation)) {
        r.cofactor = std::move(*q);
        ++r.multiplicity;
    }
    return r;
}

void validate_seed(const SeedRecord& seed) {
    if (seed.m < 3 || seed.m % 2 == 0) throw std::invalid_argument("seed m must be an odd integer >= 3");
    if (seed.P.variables() != kXY) throw std::invalid_argument("seed polynomial must be over variables (X, Y)");
    const auto deg_x = seed.P.degree_in("X");
    if (deg_x != TotalDegree::of(psi(seed.m))) {
        throw std::invalid_argument("seed deg_X is " + deg_x.to_string() + ", expected psi(m) = " +
                                    std::to_string(psi(seed.m)));
    }
    SparsePoly at_zero(kXY);
    for (const auto& [m, c] : seed.P.terms()) {
        if (m[0] == 0) at_zero.add_term(m, c);
    }
    if (at_zero != SparsePoly::constant(kXY, constant_term(seed.m))) {
        throw std::invalid_argument("seed P(0, Y) must be the constant " + constant_term(seed.m).get_str());
    }
}

Real seed_residual(const SeedRecord& seed, Precision precision_bits) {
    const Precision wp = precision_bits + kGuardBits;
    Real worst(wp);
    for (const char* tau_text : {"0,1", "0.1,0.7", "-0.4,1.2"}) {
        Complex tau = Complex::parse_pair(tau_text, wp);
        ThetaQuotients tq = theta_quotients(tau, seed.m, precision_bits);
        std::vector<Complex> point{tq.h, tq.y * Real(16L, wp)};
        ComplexEvaluation ev = eval_complex(seed.P, point, wp);
        worst = max(worst, abs(ev.value) / ev.scale);
    }
    return worst;
}

SeedRecord load_seed_file(const std::filesystem::path& path) {
    SparsePoly P = from_json(read_file(path));
    std::filesystem::path meta_path = path;
    meta_path.replace_extension(".meta.json");
    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(read_file(meta_path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed seed metadata " + meta_path.string() + ": " + e.what());
    }
    if (!meta.is_object() || !meta.contains("m") || !meta["m"].is_number_unsigned()) {
        throw std::invalid_argument("seed metadata needs an unsigned integer 'm'");
    }
    if (meta.value("normalization", std::string("theoremD")) != "theoremD") {
        throw std::invalid_argument("seed normalization must be \"theoremD\"");
    }
    SeedRecord seed{meta["m"].get<std::uint64_t>(), std::move(P), meta.value("provenance", path.string())};
    validate_seed(seed);
    const Precision check_bits = 128;
    if (!(seed_residual(seed, check_bits) < Real::exp2(-static_cast<long>(check_bits - 48), check_bits))) {
        throw std::invalid_argument("seed polynomial for m = " + std::to_string(seed.m) +
                                    " does not vanish at the theta sample points");
    }
    return seed;
}

SparsePoly rescale_seed(const SeedRecord& seed) {
    const BigInt m2 = BigInt(seed.m) * BigInt(seed.m);
    SparsePoly r(seed.P.variables());
    for (const auto& [mono, c] : seed.P.terms()) {
        BigInt f;
        BigInt g;
        mpz_pow_ui(f.get_mpz_t(), m2.get_mpz_t(), mono[0]);
        mpz_ui_pow_ui(g.get_mpz_t(), 16, mono[1]);
        r.add_term(mono, c * f * g);
    }
    return r;
}

DoubleStep double_step(const SparsePoly& Q, std::uint64_t budget, const BigInt& c) {
    if (Q.variable_count() != 2) throw std::invalid_argument("doubling needs a polynomial in two variables");
    const auto& vars = Q.variables();
    for (const auto& [m, coef] : Q.terms()) {
        if (static_cast<std::uint64_t>(m[0]) + m[1] > budget) {
            throw std::invalid_argument("monomial X^" + std::to_string(m[0]) + " Y^" + std::to_string(m[1]) +
                                        " exceeds the exponent budget " + std::to_string(budget));
        }
    }

    const SparsePoly y2 = pow(SparsePoly::variable(vars, vars[1]), 2);
    const SparsePoly one = SparsePoly::constant(vars, 1);
    const SparsePoly minus = one - y2;
    const SparsePoly plus = one + y2;
    std::vector<SparsePoly> minus_pow{one};
    std::vector<SparsePoly> plus_pow{one};
    for (std::uint64_t k = 1; k <= 2 * budget; ++k) {
        minus_pow.push_back(minus_pow.back() * minus);
        plus_pow.push_back(plus_pow.back() * plus);
    }

    SparsePoly B(vars);
    for (const auto& [m, a] : Q.terms()) {
        const std::uint64_t nu = m[0];
        const std::uint64_t mu = m[1];
        BigInt scale;
        mpz_mul_2exp(scale.get_mpz_t(), a.get_mpz_t(), 2 * nu);
        const SparsePoly y_part = minus_pow[2 * mu] * plus_pow[2 * (budget - nu - mu)];
        for (const auto& [ym, yc] : y_part.terms()) {
            Monomial out = ym;
            out[0] += static_cast<std::uint32_t>(4 * nu);
            B.add_term(out, yc * scale);
        }
    }

    SparsePoly D(vars);
    SparsePoly E(vars);
    for (const auto& [m, coef] : B.terms()) {
        if (m[0] % 4 != 0 || m[1] % 2 != 0) throw std::logic_error("B is not a polynomial in X^4 and Y^2");
        const std::uint32_t j = m[1] / 2;
        Monomial out{};
        out[0] = m[0] / 4;
        if (j % 2 == 0) {
            out[1] = j / 2;
            D.add_term(out, coef);
        } else {
            out[1] = (j - 1) / 2;
            E.add_term(out, coef);
        }
    }

    const SparsePoly y = SparsePoly::variable(vars, vars[1]);
    SparsePoly Qtilde = D * D - y * (E * E);
    SparsePoly next = substitute(Qtilde, vars[1], one - y);
    return {std::move(B), std::move(D), std::move(E), std::move(Qtilde), std::move(next), 2 * budget, c * c};
}

bool factorization_audit(const DoubleStep& step) {
    const auto& vars = step.D.variables();
    const SparsePoly y2 = pow(SparsePoly::variable(vars, vars[1]), 2);
    const SparsePoly d4 = inflate4(step.D);
    const SparsePoly e4 = y2 * inflate4(step.E);
    return inflate4(step.Qtilde) == (d4 + e4) * (d4 - e4) && step.B == d4 + e4;
}

ConstructionResult build_qn(std::uint64_t n, const std::vector<SeedRecord>& extra_seeds, bool audit) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::uint64_t alpha = 0;
    const std::uint64_t m = odd_part(n, alpha);
    if (m == 1) {
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " is a power of two; only the fixed power-of-two fixtures are available");
    }

    std::optional<SeedRecord> seed;
    for (const auto& s : extra_seeds) {
        if (s.m == m) {
            seed = s;
            break;
        }
    }
    if (!seed) {
        for (auto& s : builtin_seeds()) {
            if (s.m == m) {
                seed = std::move(s);
                break;
            }
        }
    }
    if (!seed) throw missing_seed_error("no seed polynomial P_" + std::to_string(m) + " available");
    validate_seed(*seed);

    ConstructionResult result;
    result.n = n;
    result.alpha = alpha;
    result.m = m;
    result.c = constant_term(m);
    result.Q = rescale_seed(*seed);

    std::uint64_t budget = psi(m);
    BigInt c = result.c;
    for (std::uint64_t k = 0; k < alpha; ++k) {
        DoubleStep step = double_step(result.Q, budget, c);
        budget = step.budget;
        c = step.c;
        result.Q = step.Q;
        if (audit) result.steps.push_back(std::move(step));
    }

    const std::uint64_t degree = alpha == 0 ? 0 : budget;
    if (!satisfies_leading_law(result.Q, c, degree) || !satisfies_column_degree_law(result.Q, budget)) {
        throw std::logic_error("constructed Q_" + std::to_string(n) + " violates its structural laws");
    }
    return result;
}

bool satisfies_leading_law(const SparsePoly& Q, const BigInt& c, std::uint64_t degree) {
    SparsePoly at_zero(Q.variables());
    for (const auto& [m, coef] : Q.terms()) {
        if (m[0] == 0) at_zero.add_term(m, coef);
    }
    Monomial mono{};
    mono[1] = static_cast<std::uint32_t>(degree);
    return at_zero == SparsePoly::term(Q.variables(), mono, c);
}

bool satisfies_column_degree_law(const SparsePoly& Q, std::uint64_t degree) {
    for (const auto& [m, coef] : Q.terms()) {
        if (static_cast<std::uint64_t>(m[0]) + m[1] > degree) return false;
    }
    return true;
}

}  // namespace thetamod

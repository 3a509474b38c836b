#include "thetamod/verify.hpp"

#include "thetamod/numtheory.hpp"
#include "thetamod/thetaeval.hpp"

#include <json.hpp>

#include <functional>
#include <future>
#include <map>

namespace thetamod {

namespace {

std::string trim_decimal(std::string s) {
    if (s.find('.') == std::string::npos || s.find('e') != std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string with_n(std::uint64_t n, const Complex& tau) { return "n=" + std::to_string(n) + " " + describe_tau(tau); }

Real relative_residual(const Complex& lhs, const Complex& rhs) { return abs(lhs - rhs) / abs(rhs); }

}  // namespace

std::string describe_tau(const Complex& tau) {
    return "tau=" + trim_decimal(tau.real().to_string(15)) + "," + trim_decimal(tau.imag().to_string(15));
}

Real tolerance_for(const Real& scale, Precision precision_bits) {
    const long shift = static_cast<long>(precision_bits) - static_cast<long>(kGuardBits + kToleranceSlackBits);
    return scale * Real::exp2(-shift, scale.precision());
}

ResidualReport make_report(std::string identity, std::string sample, const Real& residual, const Real& scale,
                           Precision precision_bits) {
    ResidualReport r;
    r.identity = std::move(identity);
    r.sample = std::move(sample);
    r.residual = residual.to_double();
    r.scale = scale.to_double();
    r.tolerance = tolerance_for(scale, precision_bits).to_double();
    r.verdict = r.residual <= r.tolerance ? Verdict::pass : Verdict::fail;
    r.precision_bits = precision_bits;
    return r;
}

ResidualReport check_qn_vanishing(const SparsePoly& Q, std::uint64_t n, const Complex& tau, Precision precision_bits) {
    const Precision wp = precision_bits + kGuardBits;
    ThetaQuotients tq = theta_quotients(tau, n, precision_bits);
    std::vector<Complex> point{tq.x, tq.y};
    ComplexEvaluation ev = eval_complex(Q, point, wp);
    return make_report("qn_vanishing", with_n(n, tau), abs(ev.value), ev.scale, precision_bits);
}

ResidualReport check_qn_vanishing(std::uint64_t n, const Complex& tau, Precision precision_bits,
                                  const std::vector<SeedRecord>& seeds) {
    if (n == 1) return check_qn_vanishing(parse_poly("X-1", {"X", "Y"}), 1, tau, precision_bits);
    return check_qn_vanishing(build_qn(n, seeds).Q, n, tau, precision_bits);
}

ResidualReport check_power_of_two_fixture(std::uint64_t n, const Complex& tau, Precision precision_bits) {
    const SparsePoly P = power_of_two_fixture(n);
    const Precision wp = precision_bits + kGuardBits;
    ThetaValues base = theta_eval(nome_from_tau(tau, precision_bits));
    Complex scaled = theta3(transformed_nome(tau, static_cast<std::int64_t>(n), 0, 1, precision_bits));
    std::vector<Complex> point{pow(scaled, 2) / pow(base.theta3, 2), base.theta4 / base.theta3};
    ComplexEvaluation ev = eval_complex(P, point, wp);
    return make_report("power_of_two_fixture", with_n(n, tau), abs(ev.value), ev.scale, precision_bits);
}

ResidualReport check_product_formula(std::uint64_t n, const Complex& tau, Precision precision_bits) {
    if (n == 0 || n % 2 == 0) {
        throw std::invalid_argument("the product formula is established for odd n only, got n = " + std::to_string(n));
    }
    const Precision wp = precision_bits + kGuardBits;
    Complex lhs(Real(1L, wp), Real(wp));
    for (const Triplet& t : enumerate_triplets(n)) {
        lhs *= theta3(transformed_nome(tau, static_cast<std::int64_t>(t.u), static_cast<std::int64_t>(t.v),
                                       static_cast<std::int64_t>(t.w), precision_bits));
    }
    Complex rhs = pow(theta3(nome_from_tau(tau, precision_bits)), psi(n));
    return make_report("product_formula", with_n(n, tau), relative_residual(lhs, rhs), Real(1L, wp), precision_bits);
}

ResidualReport check_root_of_unity_product(std::uint64_t p, unsigned j, const Complex& tau, Precision precision_bits) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    if (j == 0) throw std::invalid_argument("j must be at least 1");
    std::uint64_t pj = 1;
    for (unsigned i = 0; i < j; ++i) {
        pj *= p;
        if (pj > 27) throw std::invalid_argument("p^j is capped at 27");
    }
    const Precision wp = precision_bits + kGuardBits;
    const auto spj = static_cast<std::int64_t>(pj);
    Complex lhs(Real(1L, wp), Real(wp));
    for (std::int64_t k = 0; k < spj; ++k) lhs *= theta3(transformed_nome(tau, spj, k, spj, precision_bits));
    Complex num = pow(theta3(transformed_nome(tau, spj, 0, 1, precision_bits)), b_seq(p, j + 1));
    Complex den = pow(theta3(transformed_nome(tau, spj * static_cast<std::int64_t>(p), 0, 1, precision_bits)), b_seq(p, j));
    Complex rhs = num / den;
    std::string sample = "p=" + std::to_string(p) + " j=" + std::to_string(j) + " " + describe_tau(tau);
    return make_report("root_of_unity_product", sample, relative_residual(lhs, rhs), Real(1L, wp), precision_bits);
}

ResidualReport check_homogeneous_relation(const Complex& tau, Precision precision_bits) {
    const Precision wp = precision_bits + kGuardBits;
    std::vector<Complex> point{theta3(transformed_nome(tau, 3, 0, 1, precision_bits)),
                               theta3(transformed_nome(tau, 2, 0, 1, precision_bits)),
                               theta3(nome_from_tau(tau, precision_bits))};
    ComplexEvaluation ev = eval_complex(homogeneous_relation(), point, wp);
    return make_report("homogeneous_relation", describe_tau(tau), abs(ev.value), ev.scale, precision_bits);
}

ResidualReport check_jacobi_identity(const Complex& tau, Precision precision_bits) {
    ThetaValues v = theta_eval(nome_from_tau(tau, precision_bits));
    Complex t2 = pow(v.theta2, 4);
    Complex t3 = pow(v.theta3, 4);
    Complex t4 = pow(v.theta4, 4);
    Real scale = abs(t2) + abs(t3) + abs(t4);
    return make_report("jacobi_identity", describe_tau(tau), abs(t3 - t2 - t4), scale, precision_bits);
}

ResidualReport check_duplication(const Complex& tau, Precision precision_bits) {
    ThetaValues v = theta_eval(nome_from_tau(tau, precision_bits));
    ThetaValues d = theta_eval(transformed_nome(tau, 2, 0, 1, precision_bits));
    Complex s3 = pow(v.theta3, 2);
    Complex s4 = pow(v.theta4, 2);
    const Real two(2L, s3.precision());
    Complex lhs2 = pow(d.theta2, 2) * two;
    Complex lhs3 = pow(d.theta3, 2) * two;
    Real residual = max(abs(lhs2 - (s3 - s4)), abs(lhs3 - (s3 + s4)));
    Real scale = abs(lhs2) + abs(lhs3) + abs(s3) + abs(s4);
    return make_report("duplication", describe_tau(tau), residual, scale, precision_bits);
}

ResidualReport check_triple_product(const Complex& tau, Precision precision_bits) {
    QPoint q1 = nome_from_tau(tau, precision_bits);
    Complex f1 = euler_product(q1);
    Complex f2 = euler_product(transformed_nome(tau, 2, 0, 1, precision_bits));
    Complex f4 = euler_product(transformed_nome(tau, 4, 0, 1, precision_bits));
    Complex lhs = theta3(q1) * pow(f1, 2) * pow(f4, 2);
    Complex rhs = pow(f2, 5);
    return make_report("triple_product", describe_tau(tau), relative_residual(lhs, rhs), Real(1L, lhs.precision()),
                       precision_bits);
}

const std::vector<std::string>& default_tau_grid() {
    static const std::vector<std::string> grid{"0,1", "0,2", "0,0.3", "0.1,0.7", "-0.4,1.2", "0.5,0.5"};
    return grid;
}

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    c.taus = default_tau_grid();
    c.qn = {3, 5, 6, 10, 12, 20, 24};
    c.power_of_two = {2, 4, 8, 16};
    c.product = {3, 5, 9, 15};
    c.root_of_unity = {{3, 1}, {5, 1}, {3, 2}};
    c.homogeneous = true;
    c.theta_identities = true;
    return c;
}

std::vector<ResidualReport> run_suite(const SuiteConfig& config) {
    const Precision prec = config.precision_bits;
    const Precision wp = prec + kGuardBits;
    std::vector<Complex> taus;
    for (const auto& t : config.taus) taus.push_back(Complex::parse_pair(t, wp));

    std::map<std::uint64_t, SparsePoly> polys;
    for (std::uint64_t n : config.qn) {
        if (!polys.contains(n)) {
            polys.emplace(n, n == 1 ? parse_poly("X-1", {"X", "Y"}) : build_qn(n, config.seeds).Q);
        }
    }

    std::vector<std::function<ResidualReport()>> tasks;
    if (config.theta_identities) {
        for (const auto& tau : taus) tasks.emplace_back([&tau, prec] { return check_jacobi_identity(tau, prec); });
        for (const auto& tau : taus) tasks.emplace_back([&tau, prec] { return check_duplication(tau, prec); });
        for (const auto& tau : taus) tasks.emplace_back([&tau, prec] { return check_triple_product(tau, prec); });
    }
    for (std::uint64_t n : config.qn) {
        const SparsePoly& Q = polys.at(n);
        for (const auto& tau : taus) tasks.emplace_back([&Q, n, &tau, prec] { return check_qn_vanishing(Q, n, tau, prec); });
    }
    for (std::uint64_t n : config.power_of_two) {
        for (const auto& tau : taus) tasks.emplace_back([n, &tau, prec] { return check_power_of_two_fixture(n, tau, prec); });
    }
    for (std::uint64_t n : config.product) {
        for (const auto& tau : taus) tasks.emplace_back([n, &tau, prec] { return check_product_formula(n, tau, prec); });
    }
    for (auto [p, j] : config.root_of_unity) {
        for (const auto& tau : taus) {
            tasks.emplace_back([p = p, j = j, &tau, prec] { return check_root_of_unity_product(p, j, tau, prec); });
        }
    }
    if (config.homogeneous) {
        for (const auto& tau : taus) tasks.emplace_back([&tau, prec] { return check_homogeneous_relation(tau, prec); });
    }

    std::vector<ResidualReport> reports;
    reports.reserve(tasks.size());
    if (config.jobs <= 1) {
        for (auto& task : tasks) reports.push_back(task());
        return reports;
    }
    // Bounded fan-out; results are collected in task order.
    for (std::size_t start = 0; start < tasks.size(); start += config.jobs) {
        std::vector<std::future<ResidualReport>> batch;
        for (std::size_t i = start; i < std::min(tasks.size(), start + config.jobs); ++i) {
            batch.push_back(std::async(std::launch::async, tasks[i]));
        }
        for (auto& f : batch) reports.push_back(f.get());
    }
    return reports;
}

std::string to_json_line(const ResidualReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["sample"] = report.sample;
    j["residual"] = report.residual;
    j["scale"] = report.scale;
    j["tolerance"] = report.tolerance;
    j["verdict"] = report.passed() ? "pass" : "fail";
    j["precision_bits"] = report.precision_bits;
    return j.dump() + "\n";
}

std::string summary_json_line(const std::vector<ResidualReport>& reports) {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed() ? 1 : 0;
    nlohmann::ordered_json s;
    s["total"] = reports.size();
    s["passed"] = passed;
    s["failed"] = reports.size() - passed;
    nlohmann::ordered_json j;
    j["summary"] = std::move(s);
    return j.dump() + "\n";
}

}  // namespace thetamod

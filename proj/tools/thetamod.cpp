// thetamod command-line interface.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 bad arguments
// or domain violation, 3 no seed polynomial for the requested n.

#include "thetamod/modular.hpp"
#include "thetamod/numtheory.hpp"
#include "thetamod/thetaeval.hpp"
#include "thetamod/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace thetamod;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoSeed = 3;

constexpr long kMinPrecision = 64;
constexpr long kMaxPrecision = 1L << 20;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path.string());
    out << text;
}

void emit(const std::optional<fs::path>& out, const std::string& text) {
    if (out) {
        write_text(*out, text);
    } else {
        std::cout << text;
    }
}

std::vector<SeedRecord> load_seeds(const std::vector<std::string>& paths) {
    std::vector<SeedRecord> seeds;
    for (const auto& p : paths) seeds.push_back(load_seed_file(p));
    return seeds;
}

std::string pair_string(const Complex& z, int digits) { return z.real().to_string(digits) + "," + z.imag().to_string(digits); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta-constant modular polynomials: construction, evaluation and numerical verification"};
    app.require_subcommand(1);
    app.fallthrough();

    long precision = 256;
    auto* prec_opt = app.add_option("--prec", precision,
                                    "Working precision in bits (>= 64); default from THETAMOD_PRECISION, else 256")
                         ->check(CLI::Range(kMinPrecision, kMaxPrecision));

    // number theory
    std::uint64_t psi_n = 0;
    auto* psi_cmd = app.add_subcommand("psi", "psi(n) = n prod_{p | n} (1 + 1/p)");
    psi_cmd->add_option("n", psi_n)->required();

    std::uint64_t omega_a = 0, omega_b = 0;
    auto* omega_cmd = app.add_subcommand("omega", "omega(a, b) = #{0 <= v < b : gcd(a, v, b) = 1}");
    omega_cmd->add_option("a", omega_a)->required();
    omega_cmd->add_option("b", omega_b)->required();

    std::uint64_t ct_m = 0;
    auto* ct_cmd = app.add_subcommand("const-term", "Constant term P_m(0, Y) for odd m >= 3");
    ct_cmd->add_option("m", ct_m)->required();

    std::uint64_t trip_n = 0;
    bool trip_count = false;
    auto* trip_cmd = app.add_subcommand("triplets", "Triplets (u, v, w) with uw = n, 0 <= v < w, gcd(u, v, w) = 1");
    trip_cmd->add_option("n", trip_n)->required();
    trip_cmd->add_flag("--count", trip_count, "Print only the number of triplets");

    // construction
    std::uint64_t build_n = 0;
    std::vector<std::string> build_seeds;
    std::optional<std::string> build_out;
    bool build_audit = false;
    auto* build_cmd = app.add_subcommand("build", "Construct Q_n as canonical polynomial JSON");
    build_cmd->add_option("--n", build_n, "n >= 2, not a power of two")->required();
    build_cmd->add_option("--seed", build_seeds, "Seed polynomial JSON with a <stem>.meta.json sidecar")
        ->check(CLI::ExistingFile);
    build_cmd->add_option("--out", build_out, "Output file (default: stdout)");
    build_cmd->add_flag("--audit", build_audit,
                        "Also write B/D/E/Qtilde of every doubling step and check the factorization");

    // verification
    std::string identity;
    std::vector<std::uint64_t> verify_n;
    std::uint64_t verify_p = 0;
    unsigned verify_j = 1;
    std::vector<std::string> verify_taus;
    std::optional<std::string> verify_poly;
    std::vector<std::string> verify_seeds;
    std::optional<std::string> verify_out;
    unsigned verify_jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Numerically certify an identity; prints JSON lines");
    verify_cmd
        ->add_option("identity", identity,
                     "qn | pow2 | product | roots | homogeneous | jacobi | duplication | triple | suite")
        ->required()
        ->check(CLI::IsMember(
            {"qn", "pow2", "product", "roots", "homogeneous", "jacobi", "duplication", "triple", "suite"}));
    verify_cmd->add_option("--n", verify_n, "n (repeatable)");
    verify_cmd->add_option("--p", verify_p, "Odd prime for roots");
    verify_cmd->add_option("--j", verify_j, "Exponent j >= 1 for roots")->capture_default_str();
    verify_cmd->add_option("--tau", verify_taus, "Sample point \"re,im\" (repeatable; default: the fixed grid)");
    verify_cmd->add_option("--poly", verify_poly, "Polynomial JSON to check instead of building Q_n (qn only)")
        ->check(CLI::ExistingFile);
    verify_cmd->add_option("--seed", verify_seeds, "Extra seed files")->check(CLI::ExistingFile);
    verify_cmd->add_option("--out", verify_out, "Report file (default: stdout)");
    verify_cmd->add_option("--jobs", verify_jobs, "Concurrent checks")->check(CLI::Range(1u, 256u));

    // evaluation
    std::optional<std::string> theta_q, theta_tau;
    auto* theta_cmd = app.add_subcommand("theta", "Evaluate theta2, theta3, theta4");
    auto* q_opt = theta_cmd->add_option("--q", theta_q, "Nome \"re,im\" with |q| < 1");
    auto* tau_opt = theta_cmd->add_option("--tau", theta_tau, "Point \"re,im\" with Im > 0");
    q_opt->excludes(tau_opt);
    theta_cmd->require_option(1);

    // elimination
    std::optional<std::string> elim_a, elim_b, elim_out, elim_preset;
    std::string elim_var;
    auto* elim_cmd = app.add_subcommand("eliminate", "Resultant of two polynomials with respect to a variable");
    auto* a_opt = elim_cmd->add_option("--a", elim_a, "First polynomial JSON")->check(CLI::ExistingFile);
    auto* b_opt = elim_cmd->add_option("--b", elim_b, "Second polynomial JSON")->check(CLI::ExistingFile);
    auto* var_opt = elim_cmd->add_option("--var", elim_var, "Variable to eliminate");
    auto* preset_opt = elim_cmd->add_option("--preset", elim_preset, "Built-in elimination: homogeneous")
                           ->check(CLI::IsMember({"homogeneous"}));
    elim_cmd->add_option("--out", elim_out, "Output file (default: stdout)");
    a_opt->needs(b_opt, var_opt);
    preset_opt->excludes(a_opt, b_opt, var_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (prec_opt->count() == 0) {
        if (const char* env = std::getenv("THETAMOD_PRECISION"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                precision = std::stol(env, &used);
                if (env[used] != '\0') throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                std::cerr << "error: THETAMOD_PRECISION must be an integer, got '" << env << "'\n";
                return kExitUsage;
            }
            if (precision < kMinPrecision || precision > kMaxPrecision) {
                std::cerr << "error: THETAMOD_PRECISION must lie in [" << kMinPrecision << ", " << kMaxPrecision
                          << "]\n";
                return kExitUsage;
            }
        }
    }
    const auto prec = static_cast<Precision>(precision);

    try {
        if (*psi_cmd) {
            std::cout << psi(psi_n) << "\n";
        } else if (*omega_cmd) {
            std::cout << omega(omega_a, omega_b) << "\n";
        } else if (*ct_cmd) {
            std::cout << constant_term(ct_m).get_str() << "\n";
        } else if (*trip_cmd) {
            auto ts = enumerate_triplets(trip_n);
            if (trip_count) {
                std::cout << ts.size() << "\n";
            } else {
                for (const auto& t : ts) std::cout << t.u << " " << t.v << " " << t.w << "\n";
            }
        } else if (*build_cmd) {
            ConstructionResult r = build_qn(build_n, load_seeds(build_seeds), build_audit);
            std::optional<fs::path> out;
            if (build_out) out = *build_out;
            emit(out, to_json(r.Q));
            if (build_audit) {
                const fs::path stem = out ? out->parent_path() / out->stem() : fs::path("Q" + std::to_string(build_n));
                bool ok = true;
                for (std::size_t k = 0; k < r.steps.size(); ++k) {
                    const auto& s = r.steps[k];
                    const std::string prefix = stem.string() + ".step" + std::to_string(k + 1);
                    write_text(prefix + ".B.json", to_json(s.B));
                    write_text(prefix + ".D.json", to_json(s.D));
                    write_text(prefix + ".E.json", to_json(s.E));
                    write_text(prefix + ".Qtilde.json", to_json(s.Qtilde));
                    const bool good = factorization_audit(s);
                    ok = ok && good;
                    std::cerr << "step " << (k + 1) << ": factorization " << (good ? "ok" : "FAILED") << "\n";
                }
                if (!ok) return kExitFail;
            }
        } else if (*verify_cmd) {
            SuiteConfig cfg;
            cfg.precision_bits = prec;
            cfg.taus = verify_taus.empty() ? default_tau_grid() : verify_taus;
            cfg.seeds = load_seeds(verify_seeds);
            cfg.jobs = verify_jobs;
            auto need_n = [&] {
                if (verify_n.empty()) throw UsageError("verify " + identity + " needs --n");
            };
            std::vector<ResidualReport> reports;
            if (identity == "suite") {
                SuiteConfig d = SuiteConfig::defaults();
                d.precision_bits = cfg.precision_bits;
                d.taus = cfg.taus;
                d.seeds = cfg.seeds;
                d.jobs = cfg.jobs;
                cfg = d;
            } else if (identity == "qn" && verify_poly) {
                need_n();
                if (verify_n.size() != 1) throw UsageError("--poly takes exactly one --n");
                const SparsePoly Q = from_json(read_text(*verify_poly));
                for (const auto& t : cfg.taus) {
                    reports.push_back(check_qn_vanishing(Q, verify_n.front(),
                                                         Complex::parse_pair(t, prec + kGuardBits), prec));
                }
            } else if (identity == "qn") {
                need_n();
                cfg.qn = verify_n;
            } else if (identity == "pow2") {
                need_n();
                cfg.power_of_two = verify_n;
            } else if (identity == "product") {
                need_n();
                cfg.product = verify_n;
            } else if (identity == "roots") {
                if (verify_p == 0) throw UsageError("verify roots needs --p");
                cfg.root_of_unity = {{verify_p, verify_j}};
            } else if (identity == "homogeneous") {
                cfg.homogeneous = true;
            } else {
                // Single theta identity: run the three built-ins and keep the requested one.
                static const std::map<std::string, std::string> names{
                    {"jacobi", "jacobi_identity"}, {"duplication", "duplication"}, {"triple", "triple_product"}};
                cfg.theta_identities = true;
                for (auto& r : run_suite(cfg)) {
                    if (r.identity == names.at(identity)) reports.push_back(std::move(r));
                }
            }
            if (reports.empty()) reports = run_suite(cfg);

            std::string text;
            for (const auto& r : reports) text += to_json_line(r);
            text += summary_json_line(reports);
            std::optional<fs::path> out;
            if (verify_out) out = *verify_out;
            emit(out, text);
            for (const auto& r : reports) {
                if (!r.passed()) return kExitFail;
            }
        } else if (*theta_cmd) {
            const Precision wp = prec + kGuardBits;
            QPoint point = theta_q ? QPoint::from_nome(Complex::parse_pair(*theta_q, wp), prec)
                                   : nome_from_tau(Complex::parse_pair(*theta_tau, wp), prec);
            ThetaValues v = theta_eval(point);
            const int digits = decimal_digits(prec);
            std::cout << "theta2 = " << pair_string(v.theta2, digits) << "\n"
                      << "theta3 = " << pair_string(v.theta3, digits) << "\n"
                      << "theta4 = " << pair_string(v.theta4, digits) << "\n"
                      << "trunc_error_bound = " << v.trunc_error_bound.to_string(6) << "\n"
                      << "terms = " << v.terms << "\n";
        } else if (*elim_cmd) {
            std::optional<fs::path> out;
            if (elim_out) out = *elim_out;
            if (elim_preset) {
                EliminationResult r = homogeneous_elimination();
                emit(out, to_json(r.resultant));
                std::cerr << "relation multiplicity: " << r.multiplicity << "\n"
                          << "cofactor: " << to_string(r.cofactor) << "\n";
            } else if (elim_a) {
                const SparsePoly a = from_json(read_text(*elim_a));
                const SparsePoly b = embed(from_json(read_text(*elim_b)), a.variables());
                SparsePoly r = resultant(a, b, elim_var);
                if (r.variable_count() > 1) r = drop_variable(r, elim_var);
                emit(out, to_json(r));
            } else {
                throw UsageError("eliminate needs --a/--b/--var or --preset");
            }
        }
    } catch (const missing_seed_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoSeed;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}

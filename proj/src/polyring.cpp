#include "thetamod/polyring.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace thetamod {

namespace {

void check_variables(const std::vector<std::string>& vars) {
    if (vars.empty() || vars.size() > kMaxVariables) {
        throw std::invalid_argument("a polynomial needs between 1 and 4 variables, got " + std::to_string(vars.size()));
    }
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
}

void check_same_ring(const SparsePoly& a, const SparsePoly& b) {
    if (a.variables() != b.variables()) throw std::invalid_argument("polynomials over different variable lists");
}

Monomial add_exps(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = a[i] + b[i];
    return r;
}

std::uint64_t degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::uint64_t{0}); }

}  // namespace

std::uint64_t TotalDegree::value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial is -infinity");
    return *value_;
}

std::string TotalDegree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

std::strong_ordering operator<=>(const TotalDegree& a, const TotalDegree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
}

TotalDegree operator+(const TotalDegree& a, const TotalDegree& b) {
    if (!a.value_ || !b.value_) return TotalDegree::minus_infinity();
    return TotalDegree::of(*a.value_ + *b.value_);
}

SparsePoly::SparsePoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
    check_variables(variables_);
}

SparsePoly SparsePoly::constant(std::vector<std::string> variables, const BigInt& c) {
    SparsePoly p(std::move(variables));
    p.add_term(Monomial{}, c);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables, std::string_view name) {
    SparsePoly p(std::move(variables));
    Monomial m{};
    m[p.index_of(name)] = 1;
    p.add_term(m, 1);
    return p;
}

SparsePoly SparsePoly::term(std::vector<std::string> variables, const Monomial& exps, const BigInt& c) {
    SparsePoly p(std::move(variables));
    for (std::size_t i = p.variable_count(); i < kMaxVariables; ++i) {
        if (exps[i] != 0) throw std::invalid_argument("exponent given for a variable that does not exist");
    }
    p.add_term(exps, c);
    return p;
}

std::size_t SparsePoly::index_of(std::string_view name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - variables_.begin());
}

bool SparsePoly::has_variable(std::string_view name) const {
    return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

BigInt SparsePoly::coefficient(const Monomial& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePoly::add_term(const Monomial& exps, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TotalDegree SparsePoly::total_degree() const {
    if (terms_.empty()) return TotalDegree::minus_infinity();
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return TotalDegree::of(d);
}

TotalDegree SparsePoly::degree_in(std::string_view name) const {
    std::size_t idx = index_of(name);
    if (terms_.empty()) return TotalDegree::minus_infinity();
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::uint64_t>(d, m[idx]);
    return TotalDegree::of(d);
}

std::vector<SparsePoly> SparsePoly::coefficients_in(std::string_view name) const {
    std::size_t idx = index_of(name);
    std::vector<SparsePoly> out;
    if (terms_.empty()) return out;
    out.assign(degree_in(name).value() + 1, SparsePoly(variables_));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[idx] = 0;
        out[m[idx]].terms_.emplace(rest, c);
    }
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

SparsePoly operator-(const SparsePoly& p) {
    SparsePoly r = p;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    r += b;
    return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    r -= b;
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_same_ring(a, b);
    SparsePoly r(a.variables_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(add_exps(ma, mb));
            mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

SparsePoly operator*(const SparsePoly& a, const BigInt& c) {
    SparsePoly r = a;
    r *= c;
    return r;
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
    SparsePoly result = SparsePoly::constant(p.variables(), 1);
    SparsePoly base = p;
    while (k != 0) {
        if (k & 1U) result = result * base;
        k >>= 1;
        if (k != 0) base = base * base;
    }
    return result;
}

SparsePoly embed(const SparsePoly& p, const std::vector<std::string>& variables) {
    SparsePoly r(variables);
    std::vector<std::size_t> target(p.variable_count());
    for (std::size_t i = 0; i < p.variable_count(); ++i) {
        if (!r.has_variable(p.variables()[i])) {
            throw std::invalid_argument("variable '" + p.variables()[i] + "' missing from target variable list");
        }
        target[i] = r.index_of(p.variables()[i]);
    }
    for (const auto& [m, c] : p.terms()) {
        Monomial out{};
        for (std::size_t i = 0; i < p.variable_count(); ++i) out[target[i]] = m[i];
        r.add_term(out, c);
    }
    return r;
}

SparsePoly drop_variable(const SparsePoly& p, std::string_view var) {
    std::size_t idx = p.index_of(var);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < p.variable_count(); ++i) {
        if (i != idx) vars.push_back(p.variables()[i]);
    }
    SparsePoly r(vars);
    for (const auto& [m, c] : p.terms()) {
        if (m[idx] != 0) throw std::invalid_argument("polynomial depends on '" + std::string(var) + "'");
        Monomial out{};
        for (std::size_t i = 0, j = 0; i < p.variable_count(); ++i) {
            if (i != idx) out[j++] = m[i];
        }
        r.add_term(out, c);
    }
    return r;
}

SparsePoly substitute(const SparsePoly& p, std::string_view var, const SparsePoly& replacement) {
    p.index_of(var);
    SparsePoly rep = embed(replacement, p.variables());
    auto coeffs = p.coefficients_in(var);
    SparsePoly r(p.variables());
    for (auto k = coeffs.size(); k-- > 0;) {
        r = r * rep;
        r += coeffs[k];
    }
    return r;
}

Rational eval_exact(const SparsePoly& p, std::span<const Rational> point) {
    if (point.size() != p.variable_count()) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational acc = 0;
    std::vector<std::vector<Rational>> powers(point.size());
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(1);
            while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
            term *= pw[m[i]];
        }
        acc += term;
    }
    acc.canonicalize();
    return acc;
}

ComplexEvaluation eval_complex(const SparsePoly& p, std::span<const Complex> point, Precision precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("precision_bits must be at least 64");
    if (point.size() != p.variable_count()) throw std::invalid_argument("evaluation point has wrong dimension");
    const std::size_t nv = point.size();
    std::vector<Complex> x;
    std::vector<Real> bound;
    for (const auto& z : point) {
        x.push_back(z.with_precision(precision_bits));
        bound.push_back(max(abs(x.back()), Real(1L, precision_bits)));
    }
    std::vector<std::vector<Complex>> powers(nv);
    std::vector<std::vector<Real>> bound_powers(nv);
    Complex value(precision_bits);
    Real scale(precision_bits);
    for (const auto& [m, c] : p.terms()) {
        Real coef(c, precision_bits);
        Complex term(coef, Real(precision_bits));
        Real term_scale = abs(coef);
        for (std::size_t i = 0; i < nv; ++i) {
            auto& pw = powers[i];
            auto& bp = bound_powers[i];
            if (pw.empty()) {
                pw.emplace_back(Real(1L, precision_bits), Real(precision_bits));
                bp.emplace_back(1L, precision_bits);
            }
            while (pw.size() <= m[i]) {
                pw.push_back(pw.back() * x[i]);
                bp.push_back(bp.back() * bound[i]);
            }
            term *= pw[m[i]];
            term_scale *= bp[m[i]];
        }
        value += term;
        scale += term_scale;
    }
    return {std::move(value), std::move(scale)};
}

std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b) {
    check_same_ring(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    SparsePoly quotient(a.variables());
    SparsePoly rem = a;
    const auto& [lead_m, lead_c] = *b.terms().begin();
    // Lex is a well order, so the leading monomial of the remainder strictly
    // decreases and the loop terminates.
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        Monomial qm{};
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (rm[i] < lead_m[i]) return std::nullopt;
            qm[i] = rm[i] - lead_m[i];
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
        BigInt qc;
        mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
        quotient.add_term(qm, qc);
        for (const auto& [bm, bc] : b.terms()) rem.add_term(add_exps(qm, bm), -qc * bc);
    }
    return quotient;
}

SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, std::string_view var) {
    check_same_ring(p, q);
    auto dp = p.degree_in(var);
    auto dq = q.degree_in(var);
    if (dp <= TotalDegree::of(0) || dq <= TotalDegree::of(0)) {
        throw std::invalid_argument("resultant needs positive degree in '" + std::string(var) + "' for both inputs");
    }
    const std::size_t np = dp.value();
    const std::size_t nq = dq.value();
    const std::size_t n = np + nq;
    auto cp = p.coefficients_in(var);
    auto cq = q.coefficients_in(var);

    const SparsePoly zero(p.variables());
    std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n, zero));
    for (std::size_t i = 0; i < nq; ++i) {
        for (std::size_t k = 0; k <= np; ++k) m[i][i + k] = cp[np - k];
    }
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t k = 0; k <= nq; ++k) m[nq + i][i + k] = cq[nq - k];
    }

    bool negate = false;
    SparsePoly prev = SparsePoly::constant(p.variables(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return zero;
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                SparsePoly num = m[k][k] * m[i][j];
                if (!m[i][k].is_zero() && !m[k][j].is_zero()) num -= m[i][k] * m[k][j];
                auto quot = divide_exact(num, prev);
                if (!quot) throw std::logic_error("Bareiss step produced an inexact division");
                m[i][j] = std::move(*quot);
            }
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    SparsePoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

std::string to_json(const SparsePoly& p) {
    nlohmann::ordered_json doc;
    doc["variables"] = p.variables();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = std::vector<std::uint32_t>(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(p.variable_count()));
        t["coef"] = c.get_str();
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc.dump() + "\n";
}

SparsePoly from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("terms")) {
        throw std::invalid_argument("polynomial JSON needs 'variables' and 'terms'");
    }
    const auto& jv = doc["variables"];
    if (!jv.is_array()) throw std::invalid_argument("'variables' must be an array");
    std::vector<std::string> vars;
    for (const auto& v : jv) {
        if (!v.is_string()) throw std::invalid_argument("variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    SparsePoly p(vars);
    const auto& jt = doc["terms"];
    if (!jt.is_array()) throw std::invalid_argument("'terms' must be an array");
    for (const auto& t : jt) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) {
            throw std::invalid_argument("each term needs 'exp' and 'coef'");
        }
        const auto& je = t["exp"];
        if (!je.is_array() || je.size() != vars.size()) {
            throw std::invalid_argument("exponent vector length must equal the variable count");
        }
        Monomial m{};
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!je[i].is_number_unsigned()) throw std::invalid_argument("exponents must be nonnegative integers");
            m[i] = je[i].get<std::uint32_t>();
        }
        if (!t["coef"].is_string()) throw std::invalid_argument("coefficients must be decimal strings");
        const auto s = t["coef"].get<std::string>();
        BigInt c;
        const bool digits_only = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                           [](unsigned char ch) { return std::isdigit(ch); });
        if (!digits_only || s == "-" || c.set_str(s, 10) != 0) {
            throw std::invalid_argument("bad coefficient '" + s + "'");
        }
        if (c == 0) throw std::invalid_argument("zero coefficients are not stored");
        if (p.terms().contains(m)) throw std::invalid_argument("duplicate exponent vector");
        p.add_term(m, c);
    }
    return p;
}

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < p.variable_count(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.variables()[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    SparsePoly parse() {
        SparsePoly r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
    }

private:
    std::string_view text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    SparsePoly expr() {
        SparsePoly r(vars_);
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        SparsePoly t = product();
        r = negate ? -t : t;
        while (peek() == '+' || peek() == '-') {
            bool minus = text_[pos_] == '-';
            ++pos_;
            SparsePoly next = product();
            if (minus) {
                r -= next;
            } else {
                r += next;
            }
        }
        return r;
    }

    SparsePoly product() {
        SparsePoly r = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * power();
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    SparsePoly power() {
        SparsePoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
            return pow(base, static_cast<unsigned>(k));
        }
        return base;
    }

    SparsePoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return SparsePoly::constant(vars_, BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (std::find(vars_.begin(), vars_.end(), name) != vars_.end()) return SparsePoly::variable(vars_, name);
            // Juxtaposed single-letter variables ("XY^7" is X*Y^7): consume one letter.
            std::string one(1, name[0]);
            if (std::find(vars_.begin(), vars_.end(), one) == vars_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            pos_ = start + 1;
            return SparsePoly::variable(vars_, one);
        }
        fail("expected a number, variable or '('");
    }
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
    return ExprParser(text, variables).parse();
}

}  // namespace thetamod

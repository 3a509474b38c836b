#pragma once

// Exact sparse multivariate polynomials over Z.
//
// A SparsePoly owns an ordered list of 1..4 distinct variable names and a map
// from exponent vectors to nonzero big-integer coefficients. The map iterates
// in descending lexicographic order of exponent vectors, which is also the
// serialization order, so equal polynomials serialize to identical bytes.

#include "thetamod/mpreal.hpp"

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetamod {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kMaxVariables = 4;

// Exponents beyond variable_count() are always zero.
using Monomial = std::array<std::uint32_t, kMaxVariables>;

// Total degree with the zero polynomial mapped to -infinity. Comparisons order
// -infinity below every finite degree; value() refuses to produce a number for it.
class TotalDegree {
public:
    static TotalDegree minus_infinity() { return TotalDegree(); }
    static TotalDegree of(std::uint64_t d) { return TotalDegree(d); }

    bool is_minus_infinity() const { return !value_.has_value(); }
    std::uint64_t value() const;
    std::string to_string() const;

    friend bool operator==(const TotalDegree&, const TotalDegree&) = default;
    friend std::strong_ordering operator<=>(const TotalDegree& a, const TotalDegree& b);
    friend TotalDegree operator+(const TotalDegree& a, const TotalDegree& b);

private:
    TotalDegree() = default;
    explicit TotalDegree(std::uint64_t d) : value_(d) {}
    std::optional<std::uint64_t> value_;
};

class SparsePoly {
public:
    using TermMap = std::map<Monomial, BigInt, std::greater<Monomial>>;

    // The zero polynomial over `variables`.
    explicit SparsePoly(std::vector<std::string> variables);

    static SparsePoly constant(std::vector<std::string> variables, const BigInt& c);
    static SparsePoly variable(std::vector<std::string> variables, std::string_view name);
    static SparsePoly term(std::vector<std::string> variables, const Monomial& exps, const BigInt& c);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t variable_count() const { return variables_.size(); }
    // Index of `name` in the variable list; throws std::invalid_argument if absent.
    std::size_t index_of(std::string_view name) const;
    bool has_variable(std::string_view name) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Monomial& exps) const;

    // Accumulates c*x^exps, dropping the term if it cancels.
    void add_term(const Monomial& exps, const BigInt& c);

    TotalDegree total_degree() const;
    // Largest exponent of `name`; -infinity for the zero polynomial.
    TotalDegree degree_in(std::string_view name) const;
    // Element k is the coefficient of name^k, as a polynomial over the same variables.
    std::vector<SparsePoly> coefficients_in(std::string_view name) const;

    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    SparsePoly& operator*=(const BigInt& c);

    friend bool operator==(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& p);
    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const BigInt& c);
    friend SparsePoly operator*(const BigInt& c, const SparsePoly& a) { return a * c; }

private:
    std::vector<std::string> variables_;
    TermMap terms_;
};

SparsePoly pow(const SparsePoly& p, unsigned k);

// Replaces `var` by `replacement`, whose variables must be a subset of p's.
SparsePoly substitute(const SparsePoly& p, std::string_view var, const SparsePoly& replacement);

// Re-expresses p over a variable list containing all of p's variables.
SparsePoly embed(const SparsePoly& p, const std::vector<std::string>& variables);

// Removes a variable p does not depend on; throws if it does.
SparsePoly drop_variable(const SparsePoly& p, std::string_view var);

Rational eval_exact(const SparsePoly& p, std::span<const Rational> point);

struct ComplexEvaluation {
    Complex value;
    // Sum over terms of |c| * prod max(1, |x_i|)^{e_i}; normalizes residuals.
    Real scale;
};

// All arithmetic at `precision_bits` (>= 64).
ComplexEvaluation eval_complex(const SparsePoly& p, std::span<const Complex> point, Precision precision_bits);

// Quotient a/b when b divides a exactly in Z[vars], otherwise nullopt.
std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b);

// Resultant with respect to `var` via fraction-free (Bareiss) elimination of
// the Sylvester matrix. Rows 0..deg(q)-1 hold the coefficients of p, highest
// power first, rows deg(q)..deg(p)+deg(q)-1 those of q; res(Y-A, Y-B) = A-B.
// The result keeps p's variable list and does not depend on `var`.
SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, std::string_view var);

// Canonical JSON: {"variables":[...],"terms":[{"exp":[...],"coef":"..."},...]}
// with terms in descending lexicographic order, followed by a newline.
std::string to_json(const SparsePoly& p);
// Accepts terms in any order; rejects zero or duplicate terms and bad shapes.
SparsePoly from_json(std::string_view text);

// Human-readable infix form, e.g. "2*X - Y^2 - 1".
std::string to_string(const SparsePoly& p);

// Parses integer polynomial expressions with +, -, *, ^, parentheses and
// implicit multiplication ("(1+Y)^2X", "2304XY^2"). An unknown identifier is
// read one letter at a time, so "XY^2" is X*Y^2.
SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& variables);

}  // namespace thetamod

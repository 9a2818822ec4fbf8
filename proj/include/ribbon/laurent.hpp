#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"

namespace ribbon {

/// Exact integer-coefficient Laurent polynomial on a declared exponent grid.
///
/// Exponents are stored as integer multiples of 1/unit_den of the variable,
/// so a Jones polynomial lives on var 't' with unit_den 2 (t^{1/2} steps)
/// while a Kauffman bracket lives on var 'A' with unit_den 1. All arithmetic
/// is exact over int64 and overflow-checked.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(char var, int unit_den) : var_(var), den_(unit_den) {}

    static LaurentPolynomial monomial(char var, int unit_den,
                                      std::int64_t coeff, int exp_units);
    /// Constant polynomial c on the integer grid of `var`.
    static LaurentPolynomial constant(char var, std::int64_t c) {
        return monomial(var, 1, c, 0);
    }

    char var() const { return var_; }
    int unit_den() const { return den_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    /// Lowest/highest exponent in grid units. Throws on the zero polynomial.
    int min_exp() const;
    int max_exp() const;
    std::int64_t coeff(int exp_units) const;
    std::int64_t leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(int exp_units, std::int64_t coeff);

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const;

    /// Multiply by var^(delta/unit_den).
    LaurentPolynomial shifted(int delta_units) const;
    /// Substitute var -> 1/var.
    LaurentPolynomial mirrored() const;
    /// Evaluate at var = 1 (any grid) or var = -1 (integer exponents only).
    std::int64_t eval_at_one() const;
    std::int64_t eval_at_minus_one() const;
    /// Re-express on a coarser/finer grid; throws if exponents do not fit.
    LaurentPolynomial with_unit_den(int den) const;

    /// True iff p(var) == p(1/var).
    bool is_palindromic() const;

    /// Canonical text, e.g. "-t^-4 + t^-3 + t^-1" or "-t^1/2 - t^-1/2".
    std::string str() const;
    /// Sorted [exponent_numerator, exponent_denominator, coefficient] rows.
    std::vector<std::array<std::int64_t, 3>> triples() const;
    static LaurentPolynomial from_triples(
        char var, const std::vector<std::array<std::int64_t, 3>>& rows);

private:
    void check_compatible(const LaurentPolynomial& o) const;

    std::map<int, std::int64_t> terms_;
    char var_ = 't';
    int den_ = 1;
};

/// Quotient a/b when the division is exact; throws StructuralError otherwise.
LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace ribbon

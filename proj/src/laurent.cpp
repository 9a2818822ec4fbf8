#include "ribbon/laurent.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace ribbon {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 overflow in polynomial addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 overflow in polynomial multiplication");
    return r;
}

LaurentPolynomial LaurentPolynomial::monomial(char var, int unit_den,
                                              std::int64_t coeff, int exp_units) {
    LaurentPolynomial p(var, unit_den);
    p.add_term(exp_units, coeff);
    return p;
}

int LaurentPolynomial::min_exp() const {
    if (terms_.empty()) throw StructuralError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
    if (terms_.empty()) throw StructuralError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

std::int64_t LaurentPolynomial::coeff(int exp_units) const {
    auto it = terms_.find(exp_units);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exp_units, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(exp_units, coeff);
    if (!fresh) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
    if (terms_.empty() || o.terms_.empty()) return;
    if (var_ != o.var_ || den_ != o.den_)
        throw ContractError("mixed polynomial grids");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(var_, den_);
    for (auto [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    check_compatible(o);
    LaurentPolynomial r = terms_.empty() ? o : *this;
    if (terms_.empty()) return r;
    for (auto [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_compatible(o);
    LaurentPolynomial r(var_, den_);
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) return o;
    for (auto [ea, ca] : terms_)
        for (auto [eb, cb] : o.terms_)
            r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    if (terms_.empty() != o.terms_.empty()) return false;
    return var_ == o.var_ && den_ == o.den_ && terms_ == o.terms_;
}

LaurentPolynomial LaurentPolynomial::shifted(int delta_units) const {
    LaurentPolynomial r(var_, den_);
    for (auto [e, c] : terms_) r.terms_[e + delta_units] = c;
    return r;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
    LaurentPolynomial r(var_, den_);
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

std::int64_t LaurentPolynomial::eval_at_one() const {
    std::int64_t s = 0;
    for (auto [e, c] : terms_) s = checked_add(s, c);
    return s;
}

std::int64_t LaurentPolynomial::eval_at_minus_one() const {
    std::int64_t s = 0;
    for (auto [e, c] : terms_) {
        if (e % den_ != 0)
            throw ContractError("eval at -1 needs integer exponents");
        int exp = e / den_;
        s = checked_add(s, exp % 2 == 0 ? c : -c);
    }
    return s;
}

LaurentPolynomial LaurentPolynomial::with_unit_den(int den) const {
    LaurentPolynomial r(var_, den);
    for (auto [e, c] : terms_) {
        std::int64_t scaled = static_cast<std::int64_t>(e) * den;
        if (scaled % den_ != 0)
            throw StructuralError("exponent does not fit requested grid");
        r.terms_[static_cast<int>(scaled / den_)] = c;
    }
    return r;
}

bool LaurentPolynomial::is_palindromic() const {
    for (auto [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto [e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        int g = std::gcd(e < 0 ? -e : e, den_);
        int num = e / (g == 0 ? 1 : g), d = den_ / (g == 0 ? 1 : g);
        if (e == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag << "*";
        out << var_;
        if (num == 1 && d == 1) continue;
        out << "^" << num;
        if (d != 1) out << "/" << d;
    }
    return out.str();
}

std::vector<std::array<std::int64_t, 3>> LaurentPolynomial::triples() const {
    std::vector<std::array<std::int64_t, 3>> rows;
    rows.reserve(terms_.size());
    for (auto [e, c] : terms_) {
        int g = std::gcd(e < 0 ? -e : e, den_);
        if (g == 0) g = den_;
        rows.push_back({e / g, den_ / g, c});
    }
    return rows;
}

LaurentPolynomial LaurentPolynomial::from_triples(
    char var, const std::vector<std::array<std::int64_t, 3>>& rows) {
    int den = 1;
    for (const auto& r : rows) {
        if (r[1] != 1 && r[1] != 2 && r[1] != 4)
            throw ValidationError("unsupported exponent denominator");
        den = std::lcm<int>(den, static_cast<int>(r[1]));
    }
    LaurentPolynomial p(var, den);
    for (const auto& r : rows)
        p.add_term(static_cast<int>(r[0] * (den / r[1])), r[2]);
    return p;
}

LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw StructuralError("division by zero polynomial");
    if (a.is_zero()) return a;
    LaurentPolynomial rem = a;
    LaurentPolynomial q(a.var(), a.unit_den());
    int db = b.max_exp();
    std::int64_t lb = b.leading_coeff();
    // The exact quotient's exponents are bounded below by this; passing the
    // bound means the division has a nonzero remainder.
    int qmin = a.min_exp() - b.min_exp();
    while (!rem.is_zero()) {
        int da = rem.max_exp();
        std::int64_t la = rem.leading_coeff();
        if (la % lb != 0 || da - db < qmin)
            throw StructuralError("inexact polynomial division");
        auto m = LaurentPolynomial::monomial(a.var(), a.unit_den(), la / lb, da - db);
        q = q + m;
        rem = rem - m * b;
        if (!rem.is_zero() && rem.max_exp() >= da)
            throw StructuralError("inexact polynomial division");
    }
    return q;
}

}  // namespace ribbon

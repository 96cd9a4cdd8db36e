#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace curvehodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent triple of a monomial x^a y^b z^c.
struct Monomial {
    std::array<unsigned, 3> exp{};

    constexpr unsigned degree() const { return exp[0] + exp[1] + exp[2]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic comparison with x > y > z.
/// Returns a negative value if a < b, zero if equal, positive if a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// Orders monomials from largest to smallest in grevlex; used as the map comparator so that
/// iteration yields canonical printing order.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// All monomials of total degree r, largest first. Empty for r < 0.
std::vector<Monomial> monomials_of_degree(int r);

/// Sparse polynomial in x, y, z with exact rational coefficients. Zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexDescending>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    /// index 0, 1, 2 for x, y, z.
    static Polynomial variable(int index);
    static Polynomial term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Largest total degree of a term; absent for the zero polynomial.
    std::optional<unsigned> max_degree() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    Polynomial pow(unsigned exponent) const;

    /// Formal partial derivative in variable 0, 1 or 2.
    Polynomial derivative(int var) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

/// N if f is nonzero and homogeneous of degree N, absent otherwise.
std::optional<unsigned> degree_check(const Polynomial& f);

/// (f_x, f_y, f_z).
std::array<Polynomial, 3> partial_derivatives(const Polynomial& f);

/// Canonical text: grevlex order, explicit `*` and `^`, e.g. `x^2*y - 3*z^3`. Zero prints as `0`.
std::string to_string(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace curvehodge

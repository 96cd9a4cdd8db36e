#include "curvehodge/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace curvehodge {

int grevlex_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Same degree: the monomial with the smaller exponent in the last differing variable wins.
    for (int v = 2; v >= 0; --v) {
        if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
    }
    return 0;
}

std::vector<Monomial> monomials_of_degree(int r) {
    std::vector<Monomial> out;
    if (r < 0) return out;
    const auto d = static_cast<unsigned>(r);
    // Descending grevlex: increasing z, then increasing y.
    for (unsigned c = 0; c <= d; ++c) {
        for (unsigned b = 0; b + c <= d; ++b) {
            out.push_back(Monomial{{d - b - c, b, c}});
        }
    }
    return out;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(int index) {
    if (index < 0 || index > 2) throw std::out_of_range("variable index must be 0, 1 or 2");
    Monomial m;
    m.exp[static_cast<std::size_t>(index)] = 1;
    return term(m, 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> Polynomial::max_degree() const {
    if (terms_.empty()) return std::nullopt;
    // The first term is grevlex-largest and grevlex is degree-compatible.
    return terms_.begin()->first.degree();
}

// GMP only keeps results canonical when the operands are, and mpq_class(n, d) is not reduced.
void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    Rational k = c;
    k.canonicalize();
    for (auto& [m, coeff] : terms_) coeff *= k;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t v = 0; v < 3; ++v) m.exp[v] = ma.exp[v] + mb.exp[v];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var > 2) throw std::out_of_range("variable index must be 0, 1 or 2");
    const auto v = static_cast<std::size_t>(var);
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.exp[v] == 0) continue;
        Monomial d = m;
        d.exp[v] -= 1;
        out.add_term(d, c * m.exp[v]);
    }
    return out;
}

std::optional<unsigned> degree_check(const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    const unsigned n = f.terms().begin()->first.degree();
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != n) return std::nullopt;
    }
    return n;
}

std::array<Polynomial, 3> partial_derivatives(const Polynomial& f) {
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

namespace {

void print_monomial(std::ostream& os, const Monomial& m) {
    static constexpr char names[3] = {'x', 'y', 'z'};
    bool first = true;
    for (std::size_t v = 0; v < 3; ++v) {
        if (m.exp[v] == 0) continue;
        if (!first) os << '*';
        os << names[v];
        if (m.exp[v] > 1) os << '^' << m.exp[v];
        first = false;
    }
}

}  // namespace

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        const Rational mag = abs(c);
        const bool unit = mag == 1;
        if (m.degree() == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << '*';
            print_monomial(os, m);
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace curvehodge

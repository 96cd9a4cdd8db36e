#include "curvehodge/hodge.hpp"

#include <sstream>
#include <stdexcept>

#include "curvehodge/errors.hpp"

namespace curvehodge {

HDPoly::HDPoly(std::initializer_list<std::pair<std::pair<int, int>, long long>> terms) {
    for (const auto& [pq, c] : terms) add(pq.first, pq.second, c);
}

void HDPoly::add(int p, int q, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({p, q}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long HDPoly::coefficient(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? 0 : it->second;
}

bool HDPoly::is_symmetric() const {
    for (const auto& [pq, c] : terms_) {
        if (coefficient(pq.second, pq.first) != c) return false;
    }
    return true;
}

long long HDPoly::evaluate(long long u, long long v) const {
    long long total = 0;
    for (const auto& [pq, c] : terms_) {
        long long t = c;
        for (int i = 0; i < pq.first; ++i) t *= u;
        for (int i = 0; i < pq.second; ++i) t *= v;
        total += t;
    }
    return total;
}

HDPoly& HDPoly::operator+=(const HDPoly& other) {
    for (const auto& [pq, c] : other.terms_) add(pq.first, pq.second, c);
    return *this;
}

HDPoly& HDPoly::operator-=(const HDPoly& other) {
    for (const auto& [pq, c] : other.terms_) add(pq.first, pq.second, -c);
    return *this;
}

std::string to_string(const HDPoly& p) {
    if (p.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse map order is (2,2), (1,1), (1,0), (0,1), (0,0) for the polynomials produced here.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto [pq, c] = *it;
        const long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        auto append = [&](char name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += name;
            if (e > 1) mono += '^' + std::to_string(e);
        };
        append('u', pq.first);
        append('v', pq.second);
        if (mono.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << mono;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HDPoly& p) { return os << to_string(p); }

HDPoly hd_projective_plane() { return HDPoly{{{2, 2}, 1}, {{1, 1}, 1}, {{0, 0}, 1}}; }

HDPoly hd_irreducible(int degree, std::span<const Germ> germs) {
    const long long g = genus(degree, germs);
    long long lost = 0;
    for (const Germ& germ : germs) lost += germ.branches - 1;
    return HDPoly{{{1, 1}, 1}, {{1, 0}, -g}, {{0, 1}, -g}, {{0, 0}, 1 - lost}};
}

HDPoly hd_irreducible(const Component& c) { return hd_irreducible(c.degree, c.own_germs); }

HDPoly hd_curve(const CurveSpec& spec) {
    const Roster roster = singular_roster(spec);
    const long long r = roster.components;
    const long long g = roster.sum_genus;
    return HDPoly{{{1, 1}, r}, {{1, 0}, -g}, {{0, 1}, -g}, {{0, 0}, r - roster.s1 - roster.s2}};
}

HDPoly hd_complement(const CurveSpec& spec) {
    const Roster roster = singular_roster(spec);
    const long long r = roster.components;
    const long long g = roster.sum_genus;
    HDPoly direct{{{2, 2}, 1},
                  {{1, 1}, -(r - 1)},
                  {{1, 0}, g},
                  {{0, 1}, g},
                  {{0, 0}, -(r - 1) + roster.s1 + roster.s2}};
    const HDPoly by_subtraction = hd_projective_plane() - hd_curve(spec);
    if (!(direct == by_subtraction)) {
        throw std::logic_error("P(U) = " + to_string(direct) + " disagrees with P(P^2) - P(C) = " +
                               to_string(by_subtraction));
    }
    return direct;
}

HodgeReport gr_dims(const CurveSpec& spec) {
    const Roster roster = singular_roster(spec);
    const long long r = roster.components;
    const long long g = roster.sum_genus;
    HodgeReport out;
    out.gr1 = g;
    out.gr2 = g + roster.s1 + roster.s2 - r + 1;
    out.h1U = r - 1;
    out.h2U = out.gr1 + out.gr2;
    out.h00 = roster.s1 + roster.s2 - r + 1;
    out.h10 = g;
    out.h01 = g;
    out.b1C = betti1_curve(spec);
    return out;
}

long long betti1_curve(const CurveSpec& spec) {
    const Roster roster = singular_roster(spec);
    return roster.s1 + roster.s2 - roster.components + 1 + 2LL * roster.sum_genus;
}

namespace {

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

long long ordinary_point_formula(const Roster& roster) {
    const long long n = roster.degree;
    long long value = (n - 1) * (n - 2) / 2;
    for (const auto& [m, count] : roster.n) value -= choose2(m - 1) * count;
    return value;
}

}  // namespace

long long gr2_transverse(const CurveSpec& spec) {
    const ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    if (!report.hypotheses.transverse_ordinary) {
        throw HypothesisError(
            "needs only ordinary singular points on each component and transverse intersections at "
            "points smooth on every component");
    }
    return ordinary_point_formula(*report.roster);
}

long long h2_line_arrangement(const CurveSpec& spec) {
    const ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    if (!report.hypotheses.line_arrangement_like) {
        throw HypothesisError(report.hypotheses.transverse_ordinary
                                  ? "needs every component rational"
                                  : "needs ordinary singular points and transverse intersections");
    }
    return ordinary_point_formula(*report.roster);
}

Mult4Gr2 gr2_mult4(const CurveSpec& spec) {
    const ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    if (!report.hypotheses.ordinary_mult4) {
        throw HypothesisError("needs every singular point ordinary of multiplicity at most 4");
    }
    const Roster& roster = *report.roster;
    Mult4Gr2 out;
    out.b4_2 = roster.partitions.b4_2;
    out.resolved = ordinary_point_formula(roster);
    out.as_stated = out.resolved + out.b4_2;
    return out;
}

long long gr2_by_point_count(const CurveSpec& spec) {
    const ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    if (!report.hypotheses.ordinary_mult4) {
        throw HypothesisError("needs every singular point ordinary of multiplicity at most 4");
    }
    const Roster& roster = *report.roster;
    return roster.sum_genus - roster.components + 1 + roster.count(2) + 2LL * roster.count(3) +
           3LL * roster.count(4);
}

}  // namespace curvehodge

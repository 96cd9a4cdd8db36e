#include "curvehodge/curve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "curvehodge/errors.hpp"

namespace curvehodge {

namespace {

std::string germ_path(std::size_t component, std::size_t k) {
    return "components[" + std::to_string(component) + "].own_germs[" + std::to_string(k) + "]";
}

std::string incidence_path(std::size_t point, std::size_t k) {
    return "shared_points[" + std::to_string(point) + "].incidences[" + std::to_string(k) + "]";
}

std::string point_path(std::size_t point) { return "shared_points[" + std::to_string(point) + "]"; }

int arithmetic_genus(int degree) { return (degree - 1) * (degree - 2) / 2; }

}  // namespace

int delta_invariant(int mu, int branches) {
    if (mu < 1 || branches < 1) {
        throw SpecError({"delta needs mu >= 1 and branches >= 1 (got mu=" + std::to_string(mu) +
                         ", branches=" + std::to_string(branches) + ")"});
    }
    if ((mu + branches - 1) % 2 != 0) {
        throw SpecError({"mu + branches - 1 = " + std::to_string(mu + branches - 1) +
                         " is odd, so delta is not an integer"});
    }
    return (mu + branches - 1) / 2;
}

int Germ::delta() const { return delta_invariant(mu, branches); }

Germ ordinary_germ(int m) {
    if (m < 2) throw SpecError({"an ordinary singular point needs multiplicity >= 2"});
    const int mu = (m - 1) * (m - 1);
    return Germ{mu, m, mu, m, true, true};
}

std::vector<std::string> germ_violations(const Germ& g) {
    std::vector<std::string> out;
    if (g.mu < 1) out.push_back("mu must be >= 1");
    if (g.branches < 1) out.push_back("branches must be >= 1");
    if (g.tjurina < 1) out.push_back("tjurina must be >= 1");
    if (g.multiplicity < 2) out.push_back("multiplicity must be >= 2");
    if (!out.empty()) return out;
    if ((g.mu + g.branches - 1) % 2 != 0) {
        out.push_back("parity: mu + branches - 1 = " + std::to_string(g.mu + g.branches - 1) +
                      " is odd");
    }
    if (g.tjurina > g.mu) out.push_back("tjurina exceeds mu");
    if (g.branches > g.multiplicity) out.push_back("more branches than the multiplicity allows");
    const int m1 = g.multiplicity - 1;
    if (g.mu < m1 * m1) out.push_back("mu is below (multiplicity - 1)^2");
    if (g.ordinary) {
        if (g.mu != m1 * m1) out.push_back("ordinary germ needs mu = (multiplicity - 1)^2");
        if (g.branches != g.multiplicity) out.push_back("ordinary germ needs branches = multiplicity");
        if (!g.weighted_homogeneous) out.push_back("ordinary germ must be weighted homogeneous");
    }
    if (g.weighted_homogeneous && g.tjurina != g.mu) {
        out.push_back("weighted homogeneous germ needs tjurina = mu");
    }
    return out;
}

int genus(int degree, std::span<const Germ> germs) {
    if (degree < 1) throw SpecError({"component degree must be >= 1"});
    int sum_delta = 0;
    for (const Germ& g : germs) sum_delta += g.delta();
    const int g = arithmetic_genus(degree) - sum_delta;
    if (g < 0) {
        throw SpecError({"negative genus: sum of delta " + std::to_string(sum_delta) +
                         " exceeds (N-1)(N-2)/2 = " + std::to_string(arithmetic_genus(degree))});
    }
    return g;
}

int SharedPoint::total_multiplicity() const {
    int m = 0;
    for (const auto& inc : incidences) m += inc.multiplicity();
    return m;
}

bool SharedPoint::ordinary() const {
    if (!transverse) return false;
    return std::all_of(incidences.begin(), incidences.end(),
                       [](const Incidence& inc) { return !inc.germ || inc.germ->ordinary; });
}

int CurveSpec::degree() const {
    int n = 0;
    for (const auto& c : components) n += c.degree;
    return n;
}

std::vector<Germ> CurveSpec::germs_of(std::size_t j) const {
    std::vector<Germ> out = components.at(j).own_germs;
    for (const auto& point : shared_points) {
        for (const auto& inc : point.incidences) {
            if (inc.component == j && inc.germ) out.push_back(*inc.germ);
        }
    }
    return out;
}

int Roster::count(int m) const {
    auto it = n.find(m);
    return it == n.end() ? 0 : it->second;
}

namespace {

void classify_partition(const SharedPoint& point, PartitionCounts& counts) {
    std::vector<int> parts;
    for (const auto& inc : point.incidences) parts.push_back(inc.multiplicity());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const int total = point.total_multiplicity();
    if (total == 3) {
        if (parts == std::vector<int>{2, 1}) ++counts.b3_2;
        if (parts == std::vector<int>{1, 1, 1}) ++counts.b3_3;
    } else if (total == 4) {
        if (parts == std::vector<int>{3, 1}) ++counts.b4_2;
        if (parts == std::vector<int>{2, 2}) ++counts.b4_2_tilde;
        if (parts == std::vector<int>{2, 1, 1}) ++counts.b4_3;
        if (parts == std::vector<int>{1, 1, 1, 1}) ++counts.b4_4;
    }
}

}  // namespace

ValidationReport validate_spec(const CurveSpec& spec) {
    ValidationReport report;
    auto& violations = report.violations;
    const std::size_t r = spec.components.size();
    if (r == 0) violations.push_back("components: the curve needs at least one component");

    bool germs_ok = true;
    for (std::size_t j = 0; j < r; ++j) {
        const Component& c = spec.components[j];
        if (c.degree < 1) {
            violations.push_back("components[" + std::to_string(j) + "].degree: must be >= 1");
            germs_ok = false;
        }
        for (std::size_t k = 0; k < c.own_germs.size(); ++k) {
            for (const auto& v : germ_violations(c.own_germs[k])) {
                violations.push_back(germ_path(j, k) + ": " + v);
                germs_ok = false;
            }
        }
    }

    for (std::size_t b = 0; b < spec.shared_points.size(); ++b) {
        const SharedPoint& point = spec.shared_points[b];
        if (point.n() < 2) {
            violations.push_back(point_path(b) + ": a shared point needs at least two components");
        }
        std::set<std::size_t> seen;
        for (std::size_t k = 0; k < point.incidences.size(); ++k) {
            const Incidence& inc = point.incidences[k];
            if (inc.component >= r) {
                violations.push_back(incidence_path(b, k) + ".component: index out of range");
                germs_ok = false;
            } else if (!seen.insert(inc.component).second) {
                violations.push_back(incidence_path(b, k) + ".component: listed twice at this point");
            }
            if (inc.germ) {
                for (const auto& v : germ_violations(*inc.germ)) {
                    violations.push_back(incidence_path(b, k) + ".germ: " + v);
                    germs_ok = false;
                }
            }
        }
        if (point.tjurina && *point.tjurina < 1) {
            violations.push_back(point_path(b) + ".tjurina: must be >= 1");
        }
        if (point.ordinary() && point.tjurina) {
            const int m1 = point.total_multiplicity() - 1;
            if (*point.tjurina > m1 * m1) {
                violations.push_back(point_path(b) + ".tjurina: exceeds mu = (m-1)^2 of an ordinary point");
            }
            if (point.weighted_homogeneous.value_or(false) && *point.tjurina != m1 * m1) {
                violations.push_back(point_path(b) + ": weighted homogeneous point needs tjurina = mu");
            }
        }
    }
    if (!germs_ok) return report;

    // Genera and the delta bound.
    Roster roster;
    roster.components = static_cast<int>(r);
    roster.degree = spec.degree();
    for (std::size_t j = 0; j < r; ++j) {
        const auto germs = spec.germs_of(j);
        int sum_delta = 0;
        for (const Germ& g : germs) sum_delta += g.delta();
        const int bound = arithmetic_genus(spec.components[j].degree);
        const int g = bound - sum_delta;
        if (g < 0) {
            violations.push_back("components[" + std::to_string(j) + "]: delta bound violated, sum of delta " +
                                 std::to_string(sum_delta) + " > (N-1)(N-2)/2 = " + std::to_string(bound));
        } else if (spec.components[j].genus_check && *spec.components[j].genus_check != g) {
            violations.push_back("components[" + std::to_string(j) + "].genus_check: stated " +
                                 std::to_string(*spec.components[j].genus_check) + ", computed " +
                                 std::to_string(g));
        }
        roster.genera.push_back(g);
        roster.sum_genus += g;
    }

    // Intersection counts: every intersection of two components must be a listed shared point.
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            int counted = 0;
            bool exact = true;
            for (const auto& point : spec.shared_points) {
                const Incidence* a = nullptr;
                const Incidence* b = nullptr;
                for (const auto& inc : point.incidences) {
                    if (inc.component == i) a = &inc;
                    if (inc.component == j) b = &inc;
                }
                if (a == nullptr || b == nullptr) continue;
                counted += a->multiplicity() * b->multiplicity();
                if (!point.transverse) {
                    // Two tangent components meet with multiplicity above the product.
                    if (point.n() == 2) counted += 1;
                    exact = false;
                }
            }
            const int expected = spec.components[i].degree * spec.components[j].degree;
            const std::string pair = "components " + std::to_string(i) + " and " + std::to_string(j);
            if (exact && counted != expected) {
                violations.push_back(pair + ": transverse intersections account for " +
                                     std::to_string(counted) + " of the " + std::to_string(expected) +
                                     " intersection points");
            } else if (!exact && counted > expected) {
                violations.push_back(pair + ": intersection multiplicities exceed N_i*N_j = " +
                                     std::to_string(expected));
            }
        }
    }

    // Singular points of C.
    bool tau_known = true;
    int tau = 0;
    Hypotheses& h = report.hypotheses;
    h.transverse_ordinary = true;
    h.ordinary_mult4 = true;
    h.weighted_homogeneous = true;
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < spec.components[j].own_germs.size(); ++k) {
            const Germ& g = spec.components[j].own_germs[k];
            roster.s1 += g.branches - 1;
            SingularPoint p{PointKind::a_only, germ_path(j, k), g.multiplicity, g.ordinary, g.tjurina,
                            g.weighted_homogeneous};
            if (g.ordinary) {
                ++roster.n[g.multiplicity];
                ++roster.n_single[g.multiplicity];
            } else {
                ++roster.non_ordinary_points;
                h.transverse_ordinary = false;
            }
            if (!g.ordinary || g.multiplicity > 4) h.ordinary_mult4 = false;
            if (!g.weighted_homogeneous) h.weighted_homogeneous = false;
            tau += g.tjurina;
            roster.points.push_back(std::move(p));
        }
    }
    for (std::size_t b = 0; b < spec.shared_points.size(); ++b) {
        const SharedPoint& point = spec.shared_points[b];
        roster.s2 += static_cast<int>(point.n()) - 1;
        bool any_germ = false;
        for (const auto& inc : point.incidences) {
            if (inc.germ) {
                any_germ = true;
                roster.s1 += inc.germ->branches - 1;
            }
        }
        const int m = point.total_multiplicity();
        SingularPoint p;
        p.kind = any_germ ? PointKind::a_and_b : PointKind::b_only;
        p.label = point.label.empty() ? point_path(b) : point.label;
        p.multiplicity = m;
        p.ordinary = point.ordinary();
        p.tjurina = point.tjurina;
        p.weighted_homogeneous = point.weighted_homogeneous;
        if (p.ordinary) {
            ++roster.n[m];
            ++roster.n_shared[m];
            // Ordinary points are modelled as weighted homogeneous, so tau = mu = (m-1)^2.
            if (!p.tjurina) p.tjurina = (m - 1) * (m - 1);
            if (!p.weighted_homogeneous) p.weighted_homogeneous = *p.tjurina == (m - 1) * (m - 1);
        } else {
            ++roster.non_ordinary_points;
        }
        classify_partition(point, roster.partitions);
        if (!point.transverse || any_germ) h.transverse_ordinary = false;
        if (!p.ordinary || m > 4) h.ordinary_mult4 = false;
        if (!p.weighted_homogeneous.value_or(false)) h.weighted_homogeneous = false;
        if (p.tjurina) {
            tau += *p.tjurina;
        } else {
            tau_known = false;
            report.warnings.push_back(p.label + ": Tjurina number unknown, so tau(C) is unavailable");
        }
        if (!p.weighted_homogeneous) {
            report.warnings.push_back(p.label + ": weighted homogeneity not stated");
        }
        roster.points.push_back(std::move(p));
    }
    if (tau_known) roster.tau = tau;
    h.rational = roster.sum_genus == 0;
    h.line_arrangement_like = h.transverse_ordinary && h.rational;
    report.roster = std::move(roster);
    return report;
}

Roster singular_roster(const CurveSpec& spec) {
    ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    return *report.roster;
}

}  // namespace curvehodge

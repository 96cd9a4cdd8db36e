#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvehodge {

/// Local invariants of one component's germ at a singular point.
struct Germ {
    int mu = 1;            // Milnor number
    int branches = 1;      // number of irreducible branches
    int tjurina = 1;       // local Tjurina number
    int multiplicity = 2;
    bool ordinary = false;
    bool weighted_homogeneous = false;

    /// (mu + branches - 1) / 2; throws SpecError on odd numerator.
    int delta() const;
};

/// (mu + branches - 1) / 2. Throws SpecError when mu < 1, branches < 1 or the sum is odd.
int delta_invariant(int mu, int branches);

/// Ordinary m-fold point: m smooth pairwise transverse branches, mu = tau = (m-1)^2.
Germ ordinary_germ(int m);

/// Constraint violations of a single germ (empty when consistent).
std::vector<std::string> germ_violations(const Germ& g);

/// (N-1)(N-2)/2 - sum of delta over every germ of the component. Throws SpecError if negative.
int genus(int degree, std::span<const Germ> germs);

/// An irreducible component and its singular points that no other component passes through.
struct Component {
    int degree = 1;
    std::vector<Germ> own_germs;
    std::optional<int> genus_check;  // asserted genus, if the input stated one
    std::string label;
};

/// One component passing through a shared point. No germ means the component is smooth there.
struct Incidence {
    std::size_t component = 0;
    std::optional<Germ> germ;

    int multiplicity() const { return germ ? germ->multiplicity : 1; }
    int branches() const { return germ ? germ->branches : 1; }
};

/// A point lying on at least two components.
struct SharedPoint {
    std::vector<Incidence> incidences;
    bool transverse = false;  // all local branches pairwise transverse
    /// Tjurina number of the whole curve at this point, when known.
    std::optional<int> tjurina;
    std::optional<bool> weighted_homogeneous;
    std::string label;

    std::size_t n() const { return incidences.size(); }
    int total_multiplicity() const;
    /// Transverse with every incidence smooth or an ordinary germ: an ordinary point of C.
    bool ordinary() const;
};

struct CurveSpec {
    std::vector<Component> components;
    std::vector<SharedPoint> shared_points;

    int degree() const;
    /// Every germ of component j: its own germs followed by its germs at shared points.
    std::vector<Germ> germs_of(std::size_t j) const;
};

/// Where a singular point of C lives relative to the components.
enum class PointKind { a_only, b_only, a_and_b };

struct SingularPoint {
    PointKind kind = PointKind::a_only;
    std::string label;
    int multiplicity = 2;
    bool ordinary = false;
    std::optional<int> tjurina;
    std::optional<bool> weighted_homogeneous;

    friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// Counts of multiplicity-3 and multiplicity-4 shared points by how the multiplicity splits across
/// components. The superscript in the usual notation is the number of components through the point.
struct PartitionCounts {
    int b3_2 = 0;        // 2+1
    int b3_3 = 0;        // 1+1+1
    int b4_2 = 0;        // 3+1: a triple point on one component, smooth on the other
    int b4_2_tilde = 0;  // 2+2
    int b4_3 = 0;        // 2+1+1
    int b4_4 = 0;        // 1+1+1+1

    friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

struct Roster {
    int components = 0;   // r
    int degree = 0;       // N
    int sum_genus = 0;
    std::vector<int> genera;
    int s1 = 0;           // sum over all germs of (branches - 1)
    int s2 = 0;           // sum over shared points of (n(b) - 1)
    /// Ordinary m-fold points of C, keyed by m: all, on one component only, on several.
    std::map<int, int> n, n_single, n_shared;
    PartitionCounts partitions;
    int non_ordinary_points = 0;
    std::vector<SingularPoint> points;
    /// Sum of Tjurina numbers, absent when some point's value is unknown.
    std::optional<int> tau;

    int count(int m) const;  // n_m, zero if absent

    friend bool operator==(const Roster&, const Roster&) = default;
};

/// Which specialized formulas apply.
struct Hypotheses {
    /// Only ordinary germs, and components meet transversally at points smooth on each of them.
    bool transverse_ordinary = false;
    /// transverse_ordinary and every component rational.
    bool line_arrangement_like = false;
    /// Every singular point of C is ordinary of multiplicity at most 4.
    bool ordinary_mult4 = false;
    /// Every singular point is known to be weighted homogeneous.
    bool weighted_homogeneous = false;
    /// Every component rational.
    bool rational = false;

    friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    std::optional<Roster> roster;  // present when no violation prevents computing it
    Hypotheses hypotheses;

    bool valid() const { return violations.empty(); }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Checks every model invariant, the delta bound and intersection counts of each component pair,
/// and computes the singular roster.
ValidationReport validate_spec(const CurveSpec& spec);

/// The roster of a valid spec; throws SpecError listing the violations otherwise.
Roster singular_roster(const CurveSpec& spec);

}  // namespace curvehodge

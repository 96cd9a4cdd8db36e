#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvehodge/curve.hpp"
#include "curvehodge/milnor.hpp"
#include "curvehodge/polynomial.hpp"

namespace curvehodge {

/// Outcome of comparing the spec's tau(C) with the stabilized Milnor profile.
enum class TauCheck { not_computed, agree, mismatch, not_stabilized };

std::string_view to_string(TauCheck check);
std::optional<TauCheck> parse_tau_check(std::string_view text);

struct GapOptions {
    RankOptions rank;
    bool cross_check_tau = true;
    int window = 3;
    std::optional<int> r_max;  // default_rmax(N, window) when absent
};

/// dim P^2 H^2(U) - dim F^2 H^2(U) = tau(C) + sum g - dim M(f)_{2N-3} and the checks around it.
struct GapReport {
    int degree = 0;
    long long tau = 0;        // sum of local Tjurina numbers from the spec
    long long sum_genus = 0;
    long long m2n3 = 0;       // dim M(f)_{2N-3}
    long long gap = 0;
    long long h2U = 0;        // dim H^2(U)
    long long f2 = 0;         // dim F^2 H^2(U) = dim Gr^2_F
    long long p2 = 0;         // dim P^2 H^2(U) = h2U + tau - m2n3
    bool gap_nonnegative = false;    // F^2 inside P^2
    bool gap_within_genus = false;   // gap <= sum g
    bool m2n3_at_least_tau = false;  // dim M(f)_{2N-3} >= tau
    bool weighted_homogeneous = false;
    TauCheck tau_check = TauCheck::not_computed;
    std::optional<long long> profile_tau;
    std::optional<int> profile_onset;
    int profile_rmax = 0;
    std::vector<std::string> warnings;

    bool bounds_ok() const { return gap_nonnegative && gap_within_genus && m2n3_at_least_tau; }
    /// Bounds hold and the two tau sources do not contradict each other.
    bool consistent() const { return bounds_ok() && tau_check != TauCheck::mismatch; }

    friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// Throws InputError when deg f differs from the spec degree, SpecError for an invalid spec and
/// HypothesisError when a singular point is not known to be weighted homogeneous or its Tjurina
/// number is missing. Inconsistencies between spec and polynomial are reported, not thrown.
GapReport gap(const CurveSpec& spec, const Polynomial& f, const GapOptions& options = {});

/// For curves with rational components: dim M(f)_{2N-3} == tau(C). Throws HypothesisError if some
/// component has positive genus or the weighted homogeneity hypothesis fails.
bool check_rational_identity(const CurveSpec& spec, const Polynomial& f, const RankOptions& options = {});

}  // namespace curvehodge

#include "curvehodge/gap.hpp"

#include "curvehodge/errors.hpp"
#include "curvehodge/hodge.hpp"

namespace curvehodge {

std::string_view to_string(TauCheck check) {
    switch (check) {
        case TauCheck::not_computed: return "not_computed";
        case TauCheck::agree: return "agree";
        case TauCheck::mismatch: return "mismatch";
        case TauCheck::not_stabilized: return "not_stabilized";
    }
    return "?";
}

std::optional<TauCheck> parse_tau_check(std::string_view text) {
    for (auto c : {TauCheck::not_computed, TauCheck::agree, TauCheck::mismatch, TauCheck::not_stabilized}) {
        if (to_string(c) == text) return c;
    }
    return std::nullopt;
}

namespace {

struct Inputs {
    Roster roster;
    int degree = 0;
};

Inputs check_inputs(const CurveSpec& spec, const Polynomial& f) {
    const ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    const auto n = degree_check(f);
    if (!n) throw InputError("polynomial must be nonzero and homogeneous");
    if (static_cast<int>(*n) != spec.degree()) {
        throw InputError("polynomial has degree " + std::to_string(*n) + " but the spec describes a curve of degree " +
                         std::to_string(spec.degree()));
    }
    if (*n < 2) throw InputError("curve degree must be at least 2");
    if (!report.hypotheses.weighted_homogeneous) {
        throw HypothesisError("every singular point must be weighted homogeneous");
    }
    if (!report.roster->tau) throw HypothesisError("tau(C) unknown: some shared point lacks a Tjurina number");
    return {*report.roster, static_cast<int>(*n)};
}

}  // namespace

GapReport gap(const CurveSpec& spec, const Polynomial& f, const GapOptions& options) {
    const Inputs in = check_inputs(spec, f);
    const int n = in.degree;

    GapReport out;
    out.degree = n;
    out.tau = *in.roster.tau;
    out.sum_genus = in.roster.sum_genus;
    out.weighted_homogeneous = true;

    const int target = 2 * n - 3;
    if (options.cross_check_tau) {
        const int r_max = std::max(options.r_max.value_or(default_rmax(n, options.window)), target);
        const MilnorProfile profile = milnor_profile(f, r_max, options.rank, options.window);
        out.profile_rmax = r_max;
        out.m2n3 = profile.dims[static_cast<std::size_t>(target)];
        if (profile.stabilized) {
            out.profile_tau = profile.stabilized->value;
            out.profile_onset = profile.stabilized->onset;
            out.tau_check = *out.profile_tau == out.tau ? TauCheck::agree : TauCheck::mismatch;
            if (out.tau_check == TauCheck::mismatch) {
                out.warnings.push_back("stabilized Milnor profile gives tau = " + std::to_string(*out.profile_tau) +
                                       " but the spec sums to " + std::to_string(out.tau));
            }
        } else {
            out.tau_check = TauCheck::not_stabilized;
            out.warnings.push_back("Milnor profile not stabilized by degree " + std::to_string(r_max) +
                                   "; tau cross-check skipped");
        }
    } else {
        out.m2n3 = milnor_dim(f, target, options.rank);
    }

    out.gap = out.tau + out.sum_genus - out.m2n3;
    const HodgeReport hodge = gr_dims(spec);
    out.h2U = hodge.h2U;
    out.f2 = hodge.gr2;
    out.p2 = out.h2U + out.tau - out.m2n3;
    out.gap_nonnegative = out.gap >= 0;
    out.gap_within_genus = out.gap <= out.sum_genus;
    out.m2n3_at_least_tau = out.m2n3 >= out.tau;
    if (!out.gap_nonnegative) out.warnings.push_back("negative gap: F^2 would not be contained in P^2");
    if (!out.gap_within_genus) out.warnings.push_back("gap exceeds the sum of the genera");
    return out;
}

bool check_rational_identity(const CurveSpec& spec, const Polynomial& f, const RankOptions& options) {
    const Inputs in = check_inputs(spec, f);
    if (in.roster.sum_genus != 0) throw HypothesisError("every component must be rational");
    return milnor_dim(f, 2 * in.degree - 3, options) == *in.roster.tau;
}

}  // namespace curvehodge

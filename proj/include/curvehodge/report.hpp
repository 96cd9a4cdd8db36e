#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvehodge/curve.hpp"
#include "curvehodge/gap.hpp"
#include "curvehodge/hodge.hpp"
#include "curvehodge/milnor.hpp"

namespace curvehodge {

/// Everything `hodge` prints for one curve spec.
struct HodgeSummary {
    int degree = 0;
    int components = 0;
    HDPoly curve;
    HDPoly complement;
    HodgeReport dims;
    Hypotheses hypotheses;
    std::optional<long long> transverse;        // gr2_transverse
    std::optional<long long> line_arrangement;  // h2_line_arrangement
    std::optional<Mult4Gr2> mult4;
    std::optional<long long> point_count;       // gr2_by_point_count

    /// Every specialized value that applies agrees with dims.
    bool consistent() const;
    friend bool operator==(const HodgeSummary&, const HodgeSummary&) = default;
};

HodgeSummary summarize_hodge(const CurveSpec& spec);

/// Everything `milnor` prints for one polynomial.
struct MilnorSummary {
    std::string polynomial;
    int degree = 0;
    RankMode mode = RankMode::certified;
    MilnorProfile profile;

    long long m2n3() const { return profile.dims.at(static_cast<std::size_t>(2 * degree - 3)); }
    friend bool operator==(const MilnorSummary&, const MilnorSummary&) = default;
};

MilnorSummary summarize_milnor(const Polynomial& f, std::optional<int> r_max, const RankOptions& options,
                               int window);

nlohmann::json to_json(const HDPoly& p);
HDPoly hdpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HodgeSummary& s);
HodgeSummary hodge_summary_from_json(const nlohmann::json& j);
std::string render_text(const HodgeSummary& s);

nlohmann::json to_json(const MilnorSummary& s);
MilnorSummary milnor_summary_from_json(const nlohmann::json& j);
std::string render_text(const MilnorSummary& s);

nlohmann::json to_json(const GapReport& g);
GapReport gap_report_from_json(const nlohmann::json& j);
std::string render_text(const GapReport& g);

nlohmann::json to_json(const ValidationReport& v);
ValidationReport validation_report_from_json(const nlohmann::json& j);
std::string render_text(const ValidationReport& v);

}  // namespace curvehodge

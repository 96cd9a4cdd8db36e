#include "curvehodge/report.hpp"

#include <sstream>

#include "curvehodge/errors.hpp"

namespace curvehodge {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<T>();
}

json hypotheses_json(const Hypotheses& h) {
    return json{{"transverse_ordinary", h.transverse_ordinary},
                {"line_arrangement_like", h.line_arrangement_like},
                {"ordinary_mult4", h.ordinary_mult4},
                {"weighted_homogeneous", h.weighted_homogeneous},
                {"rational", h.rational}};
}

Hypotheses hypotheses_from(const json& j) {
    Hypotheses h;
    h.transverse_ordinary = j.at("transverse_ordinary").get<bool>();
    h.line_arrangement_like = j.at("line_arrangement_like").get<bool>();
    h.ordinary_mult4 = j.at("ordinary_mult4").get<bool>();
    h.weighted_homogeneous = j.at("weighted_homogeneous").get<bool>();
    h.rational = j.at("rational").get<bool>();
    return h;
}

json count_map(const std::map<int, int>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

std::map<int, int> count_map_from(const json& j) {
    std::map<int, int> out;
    for (const auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<int>();
    return out;
}

std::string_view kind_name(PointKind k) {
    switch (k) {
        case PointKind::a_only: return "single_component";
        case PointKind::b_only: return "shared";
        case PointKind::a_and_b: return "shared_and_singular_on_component";
    }
    return "?";
}

PointKind kind_from(const std::string& s) {
    if (s == "single_component") return PointKind::a_only;
    if (s == "shared") return PointKind::b_only;
    if (s == "shared_and_singular_on_component") return PointKind::a_and_b;
    throw InputError("unknown point kind " + s);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_counts(const std::map<int, int>& m) {
    if (m.empty()) return "none";
    std::string out;
    for (const auto& [k, v] : m) {
        if (!out.empty()) out += ", ";
        out += "n" + std::to_string(k) + "=" + std::to_string(v);
    }
    return out;
}

}  // namespace

bool HodgeSummary::consistent() const {
    if (transverse && *transverse != dims.gr2) return false;
    if (line_arrangement && *line_arrangement != dims.h2U) return false;
    if (mult4 && mult4->resolved != dims.gr2) return false;
    if (point_count && *point_count != dims.gr2) return false;
    return true;
}

HodgeSummary summarize_hodge(const CurveSpec& spec) {
    const ValidationReport report = validate_spec(spec);
    if (!report.valid()) throw SpecError(report.violations);
    HodgeSummary s;
    s.degree = spec.degree();
    s.components = static_cast<int>(spec.components.size());
    s.curve = hd_curve(spec);
    s.complement = hd_complement(spec);
    s.dims = gr_dims(spec);
    s.hypotheses = report.hypotheses;
    if (s.hypotheses.transverse_ordinary) s.transverse = gr2_transverse(spec);
    if (s.hypotheses.line_arrangement_like) s.line_arrangement = h2_line_arrangement(spec);
    if (s.hypotheses.ordinary_mult4) {
        s.mult4 = gr2_mult4(spec);
        s.point_count = gr2_by_point_count(spec);
    }
    return s;
}

MilnorSummary summarize_milnor(const Polynomial& f, std::optional<int> r_max, const RankOptions& options,
                               int window) {
    const auto n = degree_check(f);
    if (!n) throw InputError("polynomial must be nonzero and homogeneous");
    if (*n < 2) throw InputError("curve degree must be at least 2");
    MilnorSummary s;
    s.polynomial = to_string(f);
    s.degree = static_cast<int>(*n);
    s.mode = options.mode;
    const int top = std::max(r_max.value_or(default_rmax(s.degree, window)), 2 * s.degree - 3);
    s.profile = milnor_profile(f, top, options, window);
    return s;
}

json to_json(const HDPoly& p) {
    json terms = json::array();
    for (const auto& [pq, c] : p.terms()) terms.push_back(json::array({pq.first, pq.second, c}));
    return json{{"text", to_string(p)}, {"terms", terms}};
}

HDPoly hdpoly_from_json(const json& j) {
    HDPoly p;
    for (const auto& t : j.at("terms")) p.add(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<long long>());
    return p;
}

// ---------------------------------------------------------------------------------------------
// hodge

json to_json(const HodgeSummary& s) {
    json formulas{{"transverse", opt(s.transverse)},
                  {"line_arrangement", opt(s.line_arrangement)},
                  {"point_count", opt(s.point_count)},
                  {"mult4", s.mult4 ? json{{"as_stated", s.mult4->as_stated},
                                           {"resolved", s.mult4->resolved},
                                           {"b4_2", s.mult4->b4_2}}
                                    : json(nullptr)}};
    return json{{"command", "hodge"},
                {"degree", s.degree},
                {"components", s.components},
                {"P_C", to_json(s.curve)},
                {"P_U", to_json(s.complement)},
                {"gr1", s.dims.gr1},
                {"gr2", s.dims.gr2},
                {"h1U", s.dims.h1U},
                {"h2U", s.dims.h2U},
                {"b1C", s.dims.b1C},
                {"h1C_mixed", {{"h00", s.dims.h00}, {"h10", s.dims.h10}, {"h01", s.dims.h01}}},
                {"hypotheses", hypotheses_json(s.hypotheses)},
                {"formulas", formulas},
                {"consistent", s.consistent()}};
}

HodgeSummary hodge_summary_from_json(const json& j) {
    HodgeSummary s;
    s.degree = j.at("degree").get<int>();
    s.components = j.at("components").get<int>();
    s.curve = hdpoly_from_json(j.at("P_C"));
    s.complement = hdpoly_from_json(j.at("P_U"));
    s.dims.gr1 = j.at("gr1").get<long long>();
    s.dims.gr2 = j.at("gr2").get<long long>();
    s.dims.h1U = j.at("h1U").get<long long>();
    s.dims.h2U = j.at("h2U").get<long long>();
    s.dims.b1C = j.at("b1C").get<long long>();
    const json& mixed = j.at("h1C_mixed");
    s.dims.h00 = mixed.at("h00").get<long long>();
    s.dims.h10 = mixed.at("h10").get<long long>();
    s.dims.h01 = mixed.at("h01").get<long long>();
    s.hypotheses = hypotheses_from(j.at("hypotheses"));
    const json& f = j.at("formulas");
    s.transverse = get_opt<long long>(f, "transverse");
    s.line_arrangement = get_opt<long long>(f, "line_arrangement");
    s.point_count = get_opt<long long>(f, "point_count");
    if (!f.at("mult4").is_null()) {
        const json& m = f.at("mult4");
        s.mult4 = Mult4Gr2{m.at("as_stated").get<long long>(), m.at("resolved").get<long long>(),
                           m.at("b4_2").get<long long>()};
    }
    return s;
}

std::string render_text(const HodgeSummary& s) {
    std::ostringstream os;
    os << "curve: degree " << s.degree << ", " << s.components << " irreducible component"
       << (s.components == 1 ? "" : "s") << "\n\n";
    os << "P(C) = " << s.curve << "\n"
       << "       [r*uv - (sum g)(u+v) + r - S1 - S2, additivity over components and shared points]\n";
    os << "P(U) = " << s.complement << "\n"
       << "       [complement formula, checked against P(P^2) - P(C)]\n\n";
    os << "dim Gr^1_F H^2(U) = " << s.dims.gr1 << "    [sum of component genera]\n";
    os << "dim Gr^2_F H^2(U) = " << s.dims.gr2 << "    [sum g + S1 + S2 - r + 1]\n";
    os << "dim H^1(U)        = " << s.dims.h1U << "    [r - 1]\n";
    os << "dim H^2(U)        = " << s.dims.h2U << "    [Gr^1 + Gr^2, since F^1 H^2 = H^2]\n";
    os << "H^2(U) pure of type (2,2): " << yes_no(s.dims.gr1 == 0) << "    [iff every component is rational]\n";
    os << "b1(C)             = " << s.dims.b1C << "    [S1 + S2 - r + 1 + 2 sum g]\n";
    os << "H^1(C) mixed Hodge numbers: h00=" << s.dims.h00 << " h10=" << s.dims.h10 << " h01=" << s.dims.h01
       << "\n\n";
    os << "specialized formulas:\n";
    os << "  transverse ordinary arrangement, Gr^2 = (N-1)(N-2)/2 - sum C(m-1,2) n_m: ";
    if (s.transverse) os << *s.transverse; else os << "not applicable";
    os << "\n  rational transverse arrangement, dim H^2(U) by the same expression: ";
    if (s.line_arrangement) os << *s.line_arrangement; else os << "not applicable";
    os << "\n  ordinary points of multiplicity <= 4: ";
    if (s.mult4) {
        os << "Gr^2 = " << s.mult4->resolved << " [(N-1)(N-2)/2 - n3 - 3 n4]";
        os << "; the variant with +b4_2 gives " << s.mult4->as_stated << " (b4_2 = " << s.mult4->b4_2 << ")";
        os << "\n  point count, Gr^2 = sum g - r + 1 + n2 + 2 n3 + 3 n4: " << *s.point_count;
    } else {
        os << "not applicable";
    }
    os << "\n\nconsistency: " << (s.consistent() ? "all applicable formulas agree" : "FORMULAS DISAGREE") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------------------------
// milnor

json to_json(const MilnorSummary& s) {
    const auto& p = s.profile;
    return json{{"command", "milnor"},
                {"polynomial", s.polynomial},
                {"degree", s.degree},
                {"mode", std::string(to_string(s.mode))},
                {"r_max", static_cast<int>(p.dims.size()) - 1},
                {"window", p.window},
                {"dims", p.dims},
                {"stabilized",
                 p.stabilized ? json{{"value", p.stabilized->value}, {"onset", p.stabilized->onset}} : json(nullptr)},
                {"m2n3", {{"degree", 2 * s.degree - 3}, {"value", s.m2n3()}}},
                {"exact_fallback", p.exact_fallback}};
}

MilnorSummary milnor_summary_from_json(const json& j) {
    MilnorSummary s;
    s.polynomial = j.at("polynomial").get<std::string>();
    s.degree = j.at("degree").get<int>();
    const auto mode = parse_rank_mode(j.at("mode").get<std::string>());
    if (!mode) throw InputError("unknown rank mode in report");
    s.mode = *mode;
    s.profile.curve_degree = s.degree;
    s.profile.window = j.at("window").get<int>();
    s.profile.dims = j.at("dims").get<std::vector<long long>>();
    if (!j.at("stabilized").is_null()) {
        const json& st = j.at("stabilized");
        s.profile.stabilized = Stabilization{st.at("value").get<long long>(), st.at("onset").get<int>()};
    }
    s.profile.exact_fallback = j.at("exact_fallback").get<bool>();
    return s;
}

std::string render_text(const MilnorSummary& s) {
    std::ostringstream os;
    const int target = 2 * s.degree - 3;
    os << "f = " << s.polynomial << "\n";
    os << "degree N = " << s.degree << ", rank mode " << to_string(s.mode) << "\n\n";
    os << "   r   dim S_r   dim M(f)_r\n";
    for (std::size_t r = 0; r < s.profile.dims.size(); ++r) {
        os.width(4);
        os << r;
        os.width(10);
        os << dim_S(static_cast<int>(r));
        os.width(13);
        os << s.profile.dims[r];
        if (static_cast<int>(r) == target) os << "   <- 2N-3";
        os << "\n";
    }
    os << "\ndim M(f)_" << target << " = " << s.m2n3() << "    [degree 2N-3]\n";
    if (s.profile.stabilized) {
        os << "tau candidate = " << s.profile.stabilized->value << " from degree " << s.profile.stabilized->onset
           << "    [Milnor profile constant over the last " << s.profile.window << " degrees]\n";
    } else {
        os << "tau candidate: profile not stabilized over the last " << s.profile.window
           << " degrees; raise --rmax\n";
    }
    if (s.profile.exact_fallback) os << "note: certified primes disagreed in some degree; exact rank used there\n";
    return os.str();
}

// ---------------------------------------------------------------------------------------------
// gap

json to_json(const GapReport& g) {
    return json{{"command", "gap"},
                {"degree", g.degree},
                {"tau", g.tau},
                {"sum_genus", g.sum_genus},
                {"m2n3", g.m2n3},
                {"gap", g.gap},
                {"h2U", g.h2U},
                {"F2", g.f2},
                {"P2", g.p2},
                {"bounds",
                 {{"gap_nonnegative", g.gap_nonnegative},
                  {"gap_within_genus", g.gap_within_genus},
                  {"m2n3_at_least_tau", g.m2n3_at_least_tau}}},
                {"weighted_homogeneous", g.weighted_homogeneous},
                {"tau_check", std::string(to_string(g.tau_check))},
                {"profile_tau", opt(g.profile_tau)},
                {"profile_onset", opt(g.profile_onset)},
                {"profile_rmax", g.profile_rmax},
                {"warnings", g.warnings},
                {"consistent", g.consistent()}};
}

GapReport gap_report_from_json(const json& j) {
    GapReport g;
    g.degree = j.at("degree").get<int>();
    g.tau = j.at("tau").get<long long>();
    g.sum_genus = j.at("sum_genus").get<long long>();
    g.m2n3 = j.at("m2n3").get<long long>();
    g.gap = j.at("gap").get<long long>();
    g.h2U = j.at("h2U").get<long long>();
    g.f2 = j.at("F2").get<long long>();
    g.p2 = j.at("P2").get<long long>();
    const json& b = j.at("bounds");
    g.gap_nonnegative = b.at("gap_nonnegative").get<bool>();
    g.gap_within_genus = b.at("gap_within_genus").get<bool>();
    g.m2n3_at_least_tau = b.at("m2n3_at_least_tau").get<bool>();
    g.weighted_homogeneous = j.at("weighted_homogeneous").get<bool>();
    const auto check = parse_tau_check(j.at("tau_check").get<std::string>());
    if (!check) throw InputError("unknown tau_check in report");
    g.tau_check = *check;
    g.profile_tau = get_opt<long long>(j, "profile_tau");
    g.profile_onset = get_opt<int>(j, "profile_onset");
    g.profile_rmax = j.at("profile_rmax").get<int>();
    g.warnings = j.at("warnings").get<std::vector<std::string>>();
    return g;
}

std::string render_text(const GapReport& g) {
    std::ostringstream os;
    auto verdict = [](bool ok) { return ok ? "ok" : "VIOLATED"; };
    os << "degree N = " << g.degree << "\n";
    os << "tau(C)            = " << g.tau << "    [sum of local Tjurina numbers from the spec]\n";
    os << "sum of genera     = " << g.sum_genus << "\n";
    std::string label = "dim M(f)_" + std::to_string(2 * g.degree - 3);
    label.resize(18, ' ');
    os << label << "= " << g.m2n3 << "    [Milnor algebra in degree 2N-3]\n";
    os << "dim P^2 - dim F^2 = " << g.gap << "    [tau + sum g - dim M(f)_{2N-3}]\n";
    os << "dim H^2(U)        = " << g.h2U << "\n";
    os << "dim F^2 H^2(U)    = " << g.f2 << "    [dim H^2(U) - sum g]\n";
    os << "dim P^2 H^2(U)    = " << g.p2 << "    [dim H^2(U) + tau - dim M(f)_{2N-3}]\n\n";
    os << "bounds:\n";
    os << "  0 <= gap (F^2 inside P^2):          " << verdict(g.gap_nonnegative) << "\n";
    os << "  gap <= sum g:                       " << verdict(g.gap_within_genus) << "\n";
    os << "  dim M(f)_{2N-3} - tau >= 0:         " << verdict(g.m2n3_at_least_tau) << "\n";
    os << "weighted homogeneous singularities: " << yes_no(g.weighted_homogeneous) << "\n";
    os << "tau cross-check: " << to_string(g.tau_check);
    if (g.profile_tau) os << " (profile stabilizes at " << *g.profile_tau << " from degree " << *g.profile_onset << ")";
    os << "\n";
    for (const auto& w : g.warnings) os << "warning: " << w << "\n";
    os << "\nverdict: " << (g.consistent() ? "consistent" : "INCONSISTENT INPUT") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------------------------
// validate

json to_json(const ValidationReport& v) {
    json roster = nullptr;
    if (v.roster) {
        const Roster& r = *v.roster;
        json points = json::array();
        for (const auto& p : r.points) {
            points.push_back(json{{"kind", std::string(kind_name(p.kind))},
                                  {"label", p.label},
                                  {"multiplicity", p.multiplicity},
                                  {"ordinary", p.ordinary},
                                  {"tjurina", opt(p.tjurina)},
                                  {"weighted_homogeneous", opt(p.weighted_homogeneous)}});
        }
        const PartitionCounts& pc = r.partitions;
        roster = json{{"components", r.components},
                      {"degree", r.degree},
                      {"sum_genus", r.sum_genus},
                      {"genera", r.genera},
                      {"S1", r.s1},
                      {"S2", r.s2},
                      {"n", count_map(r.n)},
                      {"n_single", count_map(r.n_single)},
                      {"n_shared", count_map(r.n_shared)},
                      {"partitions",
                       {{"b3_2", pc.b3_2},
                        {"b3_3", pc.b3_3},
                        {"b4_2", pc.b4_2},
                        {"b4_2_tilde", pc.b4_2_tilde},
                        {"b4_3", pc.b4_3},
                        {"b4_4", pc.b4_4}}},
                      {"non_ordinary_points", r.non_ordinary_points},
                      {"points", points},
                      {"tau", opt(r.tau)}};
    }
    return json{{"command", "validate"},
                {"valid", v.valid()},
                {"violations", v.violations},
                {"warnings", v.warnings},
                {"roster", roster},
                {"hypotheses", hypotheses_json(v.hypotheses)}};
}

ValidationReport validation_report_from_json(const json& j) {
    ValidationReport v;
    v.violations = j.at("violations").get<std::vector<std::string>>();
    v.warnings = j.at("warnings").get<std::vector<std::string>>();
    v.hypotheses = hypotheses_from(j.at("hypotheses"));
    if (!j.at("roster").is_null()) {
        const json& jr = j.at("roster");
        Roster r;
        r.components = jr.at("components").get<int>();
        r.degree = jr.at("degree").get<int>();
        r.sum_genus = jr.at("sum_genus").get<int>();
        r.genera = jr.at("genera").get<std::vector<int>>();
        r.s1 = jr.at("S1").get<int>();
        r.s2 = jr.at("S2").get<int>();
        r.n = count_map_from(jr.at("n"));
        r.n_single = count_map_from(jr.at("n_single"));
        r.n_shared = count_map_from(jr.at("n_shared"));
        const json& pc = jr.at("partitions");
        r.partitions = PartitionCounts{pc.at("b3_2").get<int>(),   pc.at("b3_3").get<int>(),
                                       pc.at("b4_2").get<int>(),   pc.at("b4_2_tilde").get<int>(),
                                       pc.at("b4_3").get<int>(),   pc.at("b4_4").get<int>()};
        r.non_ordinary_points = jr.at("non_ordinary_points").get<int>();
        for (const auto& jp : jr.at("points")) {
            SingularPoint p;
            p.kind = kind_from(jp.at("kind").get<std::string>());
            p.label = jp.at("label").get<std::string>();
            p.multiplicity = jp.at("multiplicity").get<int>();
            p.ordinary = jp.at("ordinary").get<bool>();
            p.tjurina = get_opt<int>(jp, "tjurina");
            p.weighted_homogeneous = get_opt<bool>(jp, "weighted_homogeneous");
            r.points.push_back(std::move(p));
        }
        r.tau = get_opt<int>(jr, "tau");
        v.roster = std::move(r);
    }
    return v;
}

std::string render_text(const ValidationReport& v) {
    std::ostringstream os;
    os << "spec: " << (v.valid() ? "valid" : "INVALID") << "\n";
    for (const auto& s : v.violations) os << "  violation: " << s << "\n";
    for (const auto& s : v.warnings) os << "  warning: " << s << "\n";
    if (v.roster) {
        const Roster& r = *v.roster;
        os << "\nroster:\n";
        os << "  components r = " << r.components << ", degree N = " << r.degree << "\n";
        os << "  genera = [";
        for (std::size_t i = 0; i < r.genera.size(); ++i) os << (i ? ", " : "") << r.genera[i];
        os << "], sum g = " << r.sum_genus << "\n";
        os << "  S1 = " << r.s1 << "    [sum over component germs of (branches - 1)]\n";
        os << "  S2 = " << r.s2 << "    [sum over shared points of (components through it - 1)]\n";
        os << "  ordinary m-fold points: " << format_counts(r.n) << "\n";
        os << "    on one component:     " << format_counts(r.n_single) << "\n";
        os << "    on several:           " << format_counts(r.n_shared) << "\n";
        os << "  non-ordinary singular points: " << r.non_ordinary_points << "\n";
        const PartitionCounts& pc = r.partitions;
        os << "  shared points by multiplicity split: b3_2=" << pc.b3_2 << " b3_3=" << pc.b3_3 << " b4_2=" << pc.b4_2
           << " b4_2~=" << pc.b4_2_tilde << " b4_3=" << pc.b4_3 << " b4_4=" << pc.b4_4 << "\n";
        os << "  tau(C) = ";
        if (r.tau) os << *r.tau; else os << "unknown";
        os << "\n";
    }
    const Hypotheses& h = v.hypotheses;
    os << "\nhypotheses:\n";
    os << "  ordinary germs, transverse smooth intersections: " << yes_no(h.transverse_ordinary) << "\n";
    os << "  ... and all components rational:                  " << yes_no(h.line_arrangement_like) << "\n";
    os << "  all points ordinary of multiplicity <= 4:         " << yes_no(h.ordinary_mult4) << "\n";
    os << "  all points weighted homogeneous (gap formula):    " << yes_no(h.weighted_homogeneous) << "\n";
    os << "  all components rational:                          " << yes_no(h.rational) << "\n";
    return os.str();
}

}  // namespace curvehodge

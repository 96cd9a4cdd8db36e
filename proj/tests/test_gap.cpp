#include <doctest.h>

#include "curvehodge/curve_io.hpp"
#include "curvehodge/errors.hpp"
#include "curvehodge/gap.hpp"
#include "curvehodge/hodge.hpp"
#include "curvehodge/parser.hpp"
#include "test_data.hpp"

using namespace curvehodge;

namespace {

GapReport run(const std::string& spec, const std::string& poly, GapOptions options = {}) {
    return gap(load_spec(test_data::spec(spec)), parse_poly(test_data::poly_text(poly)), options);
}

}  // namespace

TEST_SUITE("gap") {
    TEST_CASE("free divisor has gap 1") {
        const GapReport g = run("free_divisor", "free_divisor");
        CHECK(g.degree == 15);
        CHECK(g.tau == 156);
        CHECK(g.sum_genus == 1);
        CHECK(g.m2n3 == 156);
        CHECK(g.gap == 1);
        CHECK(g.bounds_ok());
        CHECK(g.consistent());
        CHECK(g.tau_check == TauCheck::agree);
        CHECK(g.profile_tau == 156);
        CHECK(g.f2 == 37);
        CHECK(g.p2 == 38);
    }

    TEST_CASE("Fermat cubic with its smooth spec") {
        const GapReport g = run("fermat3", "fermat3");
        CHECK(g.tau == 0);
        CHECK(g.m2n3 == 1);
        CHECK(g.gap == 0);
        CHECK(g.consistent());
    }

    TEST_CASE("nodal cubic: dim M(f)_3 = tau + sum g") {
        const GapReport g = run("nodal_cubic", "nodal_cubic");
        CHECK(g.tau == 1);
        CHECK(g.m2n3 == 1);
        CHECK(g.m2n3 == g.tau + g.sum_genus);
        CHECK(g.gap == 0);
    }

    TEST_CASE("rational identity") {
        const RankOptions exact{RankMode::exact, 3, 1, {}};
        auto check = [&](const char* spec, const char* poly) {
            return check_rational_identity(load_spec(test_data::spec(spec)), parse_poly(test_data::poly_text(poly)), exact);
        };
        CHECK(check("tricuspidal_quartic", "tricuspidal_quartic"));
        CHECK(check("nodal_cubic", "nodal_cubic"));
        CHECK(check("three_lines", "three_lines"));
        CHECK(check("three_concurrent_lines", "three_concurrent_lines"));
        // The cusp spec claims tau = 2 for the smooth Fermat cubic, whose dim M(f)_3 is 1.
        CHECK_FALSE(check("falsified_rational", "fermat3"));
        CHECK_THROWS_AS(check("fermat3", "fermat3"), HypothesisError);

        const GapReport g = run("tricuspidal_quartic", "tricuspidal_quartic");
        CHECK(g.m2n3 == 6);
        CHECK(g.tau == 6);
        CHECK(g.gap == 0);
    }

    TEST_CASE("gap is zero for nodal and for rational corpus pairs") {
        for (const char* name : {"nodal_cubic", "three_lines", "three_concurrent_lines", "tricuspidal_quartic",
                                 "cuspidal_cubic", "fermat3", "fermat4"}) {
            const GapReport g = run(name, name);
            CAPTURE(name);
            if (g.sum_genus == 0) CHECK(g.gap == 0);
            CHECK(g.consistent());
        }
    }

    TEST_CASE("bounds on every weighted homogeneous corpus pair") {
        for (const char* name : {"fermat3", "fermat4", "fermat5", "fermat6", "nodal_cubic", "cuspidal_cubic",
                                 "tricuspidal_quartic", "three_lines", "three_concurrent_lines", "cubic_plus_line"}) {
            CAPTURE(name);
            const CurveSpec spec = load_spec(test_data::spec(name));
            const GapReport g = gap(spec, parse_poly(test_data::poly_text(name)));
            CHECK(g.gap == g.tau + g.sum_genus - g.m2n3);
            CHECK(0 <= g.m2n3 - g.tau);
            CHECK(g.m2n3 - g.tau <= g.sum_genus);
            CHECK(g.bounds_ok());
            CHECK(g.tau_check == TauCheck::agree);
            CHECK(g.p2 >= g.f2);
            CHECK(g.f2 == gr_dims(spec).gr2);
            CHECK(g.h2U == gr_dims(spec).h2U);
        }
    }

    TEST_CASE("cubic with a transverse line") {
        const GapReport g = run("cubic_plus_line", "cubic_plus_line");
        CHECK(g.tau == 3);
        CHECK(g.sum_genus == 1);
        CHECK(g.m2n3 == 4);
        CHECK(g.gap == 0);
    }

    TEST_CASE("falsified spec is reported, not thrown") {
        const GapReport g = run("falsified_rational", "fermat3");
        CHECK(g.gap == 1);
        CHECK_FALSE(g.gap_within_genus);
        CHECK_FALSE(g.m2n3_at_least_tau);
        CHECK(g.tau_check == TauCheck::mismatch);
        CHECK_FALSE(g.consistent());
        CHECK_FALSE(g.warnings.empty());
    }

    TEST_CASE("a shared point claiming weighted homogeneity with tau != mu is rejected") {
        CurveSpec s = load_spec(test_data::spec("three_concurrent_lines"));
        s.shared_points[0].tjurina = 3;
        s.shared_points[0].weighted_homogeneous = true;
        // An ordinary triple point has mu = 4.
        CHECK_FALSE(validate_spec(s).valid());
        CHECK_THROWS_AS(gap(s, parse_poly("x*y*(x+y)")), SpecError);
    }

    TEST_CASE("tau cross-check can be skipped or can fail to stabilize") {
        GapOptions o;
        o.cross_check_tau = false;
        const GapReport g = run("nodal_cubic", "nodal_cubic", o);
        CHECK(g.tau_check == TauCheck::not_computed);
        CHECK(g.consistent());

        GapOptions short_run;
        short_run.r_max = 3;
        short_run.window = 3;
        const GapReport h = run("three_concurrent_lines", "three_concurrent_lines", short_run);
        CHECK(h.m2n3 == 4);
        CHECK(h.profile_rmax == 3);
        CHECK(h.tau_check == TauCheck::not_stabilized);
        CHECK(h.consistent());
        CHECK_FALSE(h.warnings.empty());
    }

    TEST_CASE("r_max below 2N-3 is raised") {
        GapOptions o;
        o.r_max = 1;
        const GapReport g = run("fermat5", "fermat5", o);
        CHECK(g.profile_rmax >= 7);
        CHECK(g.m2n3 == 6);
    }

    TEST_CASE("input errors") {
        CHECK_THROWS_AS(run("fermat4", "fermat3"), InputError);
        CHECK_THROWS_AS(gap(load_spec(test_data::spec("fermat3")), parse_poly("x^3 + y")), InputError);
        CHECK_THROWS_AS(gap(load_spec(test_data::spec("invalid_parity")), parse_poly("x^4+y^4+z^4")), SpecError);

        // A germ that is not weighted homogeneous.
        CurveSpec s;
        s.components.push_back(Component{5, {Germ{6, 1, 5, 3, false, false}}, {}, {}});
        CHECK_THROWS_AS(gap(s, parse_poly("x^5+y^5+z^5")), HypothesisError);

        // A non-ordinary shared point without a Tjurina number.
        CurveSpec t;
        t.components = {Component{2, {}, {}, {}}, Component{1, {}, {}, {}}};
        SharedPoint tangent;
        tangent.incidences = {Incidence{0, {}}, Incidence{1, {}}};
        tangent.weighted_homogeneous = true;
        t.shared_points = {tangent};
        CHECK_THROWS_AS(gap(t, parse_poly("(x*z - y^2)*x")), HypothesisError);
    }

    TEST_CASE("tau check names") {
        for (TauCheck c : {TauCheck::not_computed, TauCheck::agree, TauCheck::mismatch, TauCheck::not_stabilized})
            CHECK(parse_tau_check(to_string(c)) == c);
        CHECK_FALSE(parse_tau_check("maybe").has_value());
    }
}

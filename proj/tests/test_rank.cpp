#include <doctest.h>

#include <random>

#include "curvehodge/errors.hpp"
#include "curvehodge/matrix.hpp"
#include "curvehodge/milnor.hpp"
#include "curvehodge/parser.hpp"
#include "oracles.hpp"

using namespace curvehodge;

namespace {

constexpr std::uint64_t kP = 1'000'000'007ULL;
constexpr std::uint64_t kQ = 998'244'353ULL;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap) {
    // Product of random rows x rank_cap and rank_cap x cols factors, so the rank is at most rank_cap.
    std::uniform_int_distribution<long> d(-5, 5);
    IntMatrix a(rows, static_cast<std::size_t>(rank_cap)), b(static_cast<std::size_t>(rank_cap), cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (int k = 0; k < rank_cap; ++k) a(i, static_cast<std::size_t>(k)) = d(rng);
    for (int k = 0; k < rank_cap; ++k)
        for (std::size_t j = 0; j < cols; ++j) b(static_cast<std::size_t>(k), j) = d(rng);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int k = 0; k < rank_cap; ++k) m(i, j) += a(i, static_cast<std::size_t>(k)) * b(static_cast<std::size_t>(k), j);
    return m;
}

}  // namespace

TEST_SUITE("rank") {
    TEST_CASE("exact rank examples") {
        CHECK(rank_exact(IntMatrix::identity(3)) == 3);
        CHECK(rank_exact(IntMatrix(4, 7)) == 0);
        CHECK(rank_exact(IntMatrix{{1, 2}, {2, 4}}) == 1);
        CHECK(rank_exact(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == 3);
        CHECK(rank_exact(IntMatrix{}) == 0);
    }

    TEST_CASE("modular rank examples") {
        CHECK(rank_modular(IntMatrix::identity(3), kP) == 3);
        CHECK(rank_modular(IntMatrix(3, 5), kP) == 0);
        const IntMatrix bad{{static_cast<long>(kP), 0}, {0, 1}};
        CHECK(rank_modular(bad, kP) == 1);
        CHECK(rank_exact(bad) == 2);
        CHECK(rank_modular(IntMatrix{{-1, 3}, {2, -6}}, 7) == 1);
        CHECK_THROWS_AS(rank_modular(IntMatrix::identity(2), 1'000'000'008ULL), std::invalid_argument);
        CHECK_THROWS_AS(rank_modular(IntMatrix::identity(2), 1), std::invalid_argument);
    }

    TEST_CASE("Miller-Rabin") {
        CHECK_FALSE(is_prime(0));
        CHECK_FALSE(is_prime(1));
        CHECK(is_prime(2));
        CHECK(is_prime(kP));
        CHECK(is_prime(18446744073709551557ULL));
        CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
        CHECK_FALSE(is_prime(kP * 3));
        int count = 0;
        for (std::uint64_t n = 0; n < 10000; ++n) count += is_prime(n);
        CHECK(count == 1229);
    }

    TEST_CASE("random primes are distinct and in range") {
        std::mt19937_64 rng(1);
        const auto ps = random_primes(5, kPrimeLow, kPrimeHigh, rng);
        REQUIRE(ps.size() == 5);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(is_prime(ps[i]));
            CHECK(ps[i] > kPrimeLow);
            CHECK(ps[i] < kPrimeHigh);
            for (std::size_t j = 0; j < i; ++j) CHECK(ps[i] != ps[j]);
        }
    }

    TEST_CASE("certified rank falls back when the primes disagree") {
        const IntMatrix bad{{static_cast<long>(kP), 0}, {0, 1}};
        const std::vector<std::uint64_t> primes{kP, kQ, 2'147'483'647ULL};
        const CertifiedRank c = rank_certified(bad, primes);
        CHECK(c.exact_fallback);
        CHECK(c.rank == 2);
        CHECK(c.modular_ranks == std::vector<std::size_t>{1, 2, 2});

        const std::vector<std::uint64_t> good{kQ, 2'147'483'647ULL};
        const CertifiedRank d = rank_certified(bad, good);
        CHECK_FALSE(d.exact_fallback);
        CHECK(d.rank == 2);
    }

    TEST_CASE("rank properties on random matrices") {
        std::mt19937_64 rng(42);
        for (int t = 0; t < 150; ++t) {
            const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
            const int cap = 1 + static_cast<int>(rng() % 6);
            IntMatrix m = random_matrix(rng, rows, cols, cap);
            CHECK(rank_exact(m) <= static_cast<std::size_t>(cap));
            // Knock out entries so that independent blocks appear.
            if (rng() % 2)
                for (std::size_t j = 0; j < cols; ++j) m(rng() % rows, j) = 0;
            const std::size_t r = rank_exact(m);
            CHECK(rank_exact(m.transpose()) == r);
            CHECK(rank_modular(m, kP) <= r);
            CHECK(rank_modular(m, 5) <= r);
            std::size_t block_sum = 0;
            for (const auto& b : split_blocks(m)) block_sum += rank_exact(b);
            CHECK(block_sum == r);
        }
    }

    TEST_CASE("block split of a block diagonal matrix") {
        IntMatrix m{{1, 0, 0, 2}, {0, 3, 0, 0}, {4, 0, 0, 8}, {0, 0, 0, 0}};
        const auto blocks = split_blocks(m);
        REQUIRE(blocks.size() == 2);
        CHECK(blocks[0] == IntMatrix{{1, 2}, {4, 8}});
        CHECK(blocks[1] == IntMatrix{{3}});
    }
}

TEST_SUITE("milnor") {
    const RankOptions exact{RankMode::exact, 3, 1, {}};

    TEST_CASE("dim_S") {
        CHECK(dim_S(0) == 1);
        CHECK(dim_S(3) == 10);
        CHECK(dim_S(27) == 406);
        CHECK(dim_S(-1) == 0);
    }

    TEST_CASE("graded map shapes") {
        const Polynomial f = parse_poly("x^3+y^3+z^3");
        const GradedMap empty = build_graded_map(f, 1);
        CHECK(empty.matrix.rows() == 3);
        CHECK(empty.matrix.cols() == 0);

        // r = N - 1: the source is the constant 1, so the columns are the partials 3x^2, 3y^2, 3z^2.
        const GradedMap first = build_graded_map(f, 2);
        CHECK(first.matrix.rows() == 6);
        CHECK(first.matrix.cols() == 3);
        CHECK(rank_exact(first.matrix) == 3);

        // Source degree 1: x, y, z times each partial, nine columns of rank 9 (dim M(f)_3 = 10 - 9).
        const GradedMap m3 = build_graded_map(f, 3);
        CHECK(m3.matrix.rows() == 10);
        CHECK(m3.matrix.cols() == 9);
        CHECK(rank_exact(m3.matrix) == 9);

        // Source degree 0: the three partials of a conic.
        const GradedMap q = build_graded_map(parse_poly("x^2+y^2+z^2"), 1);
        CHECK(q.matrix.cols() == 3);
        CHECK(rank_exact(q.matrix) == 3);
    }

    TEST_CASE("graded map columns are the products m * f_g") {
        const Polynomial f = parse_poly("x^3+y^3+z^3");
        const GradedMap m = build_graded_map(f, 3);
        REQUIRE(m.source.size() == 3);
        for (int g = 0; g < 3; ++g) {
            const Polynomial d = f.derivative(g);
            for (std::size_t s = 0; s < m.source.size(); ++s) {
                const Polynomial prod = Polynomial::term(m.source[s], 1) * d;
                const std::size_t col = static_cast<std::size_t>(g) * m.source.size() + s;
                for (std::size_t row = 0; row < m.rows.size(); ++row)
                    CHECK(Rational(m.matrix(row, col)) == prod.coefficient(m.rows[row]));
            }
        }
    }

    TEST_CASE("graded map dimensions for the free divisor at degree 27") {
        const Polynomial f = parse_poly("x*y*z*(x^3+y^3+z^3)*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)");
        const GradedMap m = build_graded_map(f, 27);
        CHECK(m.matrix.rows() == 406);
        CHECK(m.matrix.cols() == 315);
    }

    TEST_CASE("column count is 3 * C(r-N+3, 2)") {
        const Polynomial f = parse_poly("x^4 + y^4 + z^4 + x*y*z^2");
        for (int r = 0; r <= 9; ++r) {
            const GradedMap m = build_graded_map(f, r);
            CHECK(m.matrix.rows() == static_cast<std::size_t>(dim_S(r)));
            CHECK(m.matrix.cols() == static_cast<std::size_t>(r >= 3 ? 3 * oracle::binomial(r - 4 + 3, 2) : 0));
        }
    }

    TEST_CASE("columns clear denominators") {
        const Polynomial f = parse_poly("x^2 + y^2 + z^2") * Rational(1, 6);
        const GradedMap m = build_graded_map(f, 1);
        CHECK(rank_exact(m.matrix) == 3);
        for (std::size_t i = 0; i < m.matrix.rows(); ++i)
            for (std::size_t j = 0; j < m.matrix.cols(); ++j) CHECK(abs(m.matrix(i, j)) <= 3);
    }

    TEST_CASE("graded map rejects bad input") {
        CHECK_THROWS_AS(build_graded_map(parse_poly("x^2+y"), 3), InputError);
        CHECK_THROWS_AS(build_graded_map(Polynomial{}, 3), InputError);
        CHECK_THROWS_AS(build_graded_map(parse_poly("x+y"), 3), InputError);
        CHECK_THROWS_AS(build_graded_map(parse_poly("7"), 3), InputError);
    }

    TEST_CASE("graded map is deterministic") {
        const Polynomial f = parse_poly("x^2*y + y^2*z + z^2*x");
        CHECK(build_graded_map(f, 5).matrix == build_graded_map(f, 5).matrix);
    }

    TEST_CASE("milnor_dim examples") {
        const Polynomial fermat = parse_poly("x^3+y^3+z^3");
        CHECK(milnor_dim(fermat, 3, exact) == 1);
        CHECK(milnor_dim(fermat, 0, exact) == 1);
        CHECK(milnor_dim(parse_poly("x^5 + y^5 + z^5"), 0, {}) == 1);
    }

    TEST_CASE("Fermat cubic profile is 1,3,3,1,0,0,0") {
        const MilnorProfile p = milnor_profile(parse_poly("x^3+y^3+z^3"), 6, exact);
        CHECK(p.dims == std::vector<long long>{1, 3, 3, 1, 0, 0, 0});
        REQUIRE(p.stabilized.has_value());
        CHECK(p.stabilized->value == 0);
        CHECK(p.stabilized->onset == 4);
        CHECK(tjurina_from_profile(p) == 0);
    }

    TEST_CASE("nodal cubic profile stabilizes at 1") {
        const MilnorProfile p = milnor_profile(parse_poly("z*y^2 - x^2*(x + z)"), 6, exact);
        REQUIRE(p.stabilized.has_value());
        CHECK(p.stabilized->value == 1);
        CHECK(p.stabilized->onset <= 6);
        CHECK(tjurina_from_profile(p) == 1);
    }

    TEST_CASE("Fermat profiles match the closed form in every mode") {
        for (int n = 3; n <= 6; ++n) {
            const Polynomial f = parse_poly("x^" + std::to_string(n) + " + y^" + std::to_string(n) + " + z^" +
                                            std::to_string(n));
            const int r_max = default_rmax(n, 3);
            const auto expected = oracle::staircase(n, r_max);
            CHECK(expected == oracle::closed_form_series(n, r_max));
            for (RankMode mode : {RankMode::exact, RankMode::modular, RankMode::certified}) {
                RankOptions o;
                o.mode = mode;
                CHECK(milnor_profile(f, r_max, o).dims == expected);
            }
        }
    }

    TEST_CASE("dims agree with the Gaussian elimination oracle") {
        for (const char* text : {"z*y^2 - x^2*(x + z)", "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
                                 "x*y*(x + y)", "(x^3 + y^3 + z^3)*(x + y + 2*z)", "z*y^2 - x^3",
                                 "x*y*z*(x + y + z)", "x*y*z*(x^3 + y^3 + z^3)"}) {
            const Polynomial f = parse_poly(text);
            const int n = static_cast<int>(*degree_check(f));
            const MilnorProfile p = milnor_profile(f, 3 * n, exact);
            for (int r = 0; r <= 3 * n; ++r) CHECK(p.dims[static_cast<std::size_t>(r)] == oracle::milnor_dim_gauss(f, r));
        }
    }

    TEST_CASE("rational coefficients give the same dims as their integer multiple") {
        const Polynomial f = parse_poly("x^3") * Rational(1, 2) + parse_poly("y^2*z") * Rational(2, 3) + parse_poly("z^3");
        const Polynomial g = parse_poly("3*x^3 + 4*y^2*z + 6*z^3");
        const MilnorProfile pf = milnor_profile(f, 7, exact);
        CHECK(pf.dims == milnor_profile(g, 7, exact).dims);
        for (int r = 0; r <= 7; ++r) CHECK(pf.dims[static_cast<std::size_t>(r)] == oracle::milnor_dim_gauss(f, r));
    }

    TEST_CASE("dims equal dim S_r below degree N-1") {
        const Polynomial f = parse_poly("x^5 + x*y^4 + z^5 - 3*x^2*y*z^2");
        const MilnorProfile p = milnor_profile(f, 12, {});
        for (int r = 0; r <= 3; ++r) CHECK(p.dims[static_cast<std::size_t>(r)] == dim_S(r));
        for (long long d : p.dims) CHECK(d >= 0);
    }

    TEST_CASE("modular dims are at least the exact dims") {
        const Polynomial f = parse_poly("x*y*z*(x + y + z)*(x - y)");
        const MilnorProfile e = milnor_profile(f, 10, exact);
        for (std::uint64_t p : {std::uint64_t{3}, std::uint64_t{5}, std::uint64_t{7}, kP}) {
            RankOptions o;
            o.mode = RankMode::modular;
            o.primes = {p};
            const MilnorProfile m = milnor_profile(f, 10, o);
            for (std::size_t r = 0; r < e.dims.size(); ++r) CHECK(m.dims[r] >= e.dims[r]);
        }
    }

    TEST_CASE("a bad prime forces the exact fallback") {
        const Polynomial f = parse_poly("1000000007*x^3 + y^3 + z^3");
        RankOptions o;
        o.primes = {kP, kQ, 2'147'483'647ULL};
        const MilnorProfile c = milnor_profile(f, 6, o);
        CHECK(c.exact_fallback);
        CHECK(c.dims == milnor_profile(f, 6, exact).dims);

        RankOptions single;
        single.mode = RankMode::modular;
        single.primes = {kP};
        CHECK(milnor_profile(f, 6, single).dims[3] > c.dims[3]);
    }

    TEST_CASE("stabilization detection") {
        CHECK_FALSE(detect_stabilization({1, 3, 3, 1}, 3).has_value());
        CHECK(detect_stabilization({1, 3, 3, 3}, 3) == Stabilization{3, 1});
        CHECK(detect_stabilization({5, 5, 5, 5}, 3) == Stabilization{5, 0});
        CHECK(detect_stabilization({1, 2}, 2) == std::nullopt);
        CHECK_THROWS_AS(detect_stabilization({1, 1, 1}, 1), std::invalid_argument);

        MilnorProfile p;
        p.dims = {1, 3, 3, 1};
        CHECK_THROWS_AS(tjurina_from_profile(p), StabilizationError);
    }

    TEST_CASE("default r_max") {
        CHECK(default_rmax(3, 3) == 6);
        CHECK(default_rmax(15, 3) == 42);
        CHECK(default_rmax(2, 3) == 4);
    }

    TEST_CASE("rank mode names") {
        CHECK(parse_rank_mode("exact") == RankMode::exact);
        CHECK(parse_rank_mode("modular") == RankMode::modular);
        CHECK(parse_rank_mode("certified") == RankMode::certified);
        CHECK_FALSE(parse_rank_mode("fast").has_value());
        CHECK(to_string(RankMode::certified) == "certified");
    }

    TEST_CASE("profile rejects bad arguments") {
        const Polynomial f = parse_poly("x^3+y^3+z^3");
        CHECK_THROWS_AS(milnor_profile(f, 6, exact, 1), std::invalid_argument);
        CHECK_THROWS_AS(milnor_profile(f, -1, exact), std::invalid_argument);
        CHECK_THROWS_AS(milnor_profile(parse_poly("x+y"), 4, exact), InputError);
    }
}

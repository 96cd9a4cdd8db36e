#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "curvehodge/matrix.hpp"
#include "curvehodge/polynomial.hpp"

namespace curvehodge {

enum class RankMode { exact, modular, certified };

std::string_view to_string(RankMode mode);
/// Accepts "exact", "modular", "certified".
std::optional<RankMode> parse_rank_mode(std::string_view text);

struct RankOptions {
    RankMode mode = RankMode::certified;
    std::size_t prime_count = 3;      // certified mode
    std::uint64_t seed = 0x5eedc0ffeeULL;
    /// When nonempty, used instead of random primes (first entry only in modular mode).
    std::vector<std::uint64_t> primes;
};

/// Primes for certified mode are drawn from this open interval.
inline constexpr std::uint64_t kPrimeLow = std::uint64_t{1} << 30U;
inline constexpr std::uint64_t kPrimeHigh = std::uint64_t{1} << 31U;

/// dim S_r = C(r+2, 2); zero for negative r.
long long dim_S(int r);

/// Degree-r piece of the Jacobian ideal as the image of S_{r-N+1}^3.
///
/// Rows are the degree-r monomials in descending grevlex order. Column g * |source| + s holds
/// the coefficients of source[s] * f_g (g = 0, 1, 2 for x, y, z), scaled by the least common
/// denominator of f_g so the entries are integers.
struct GradedMap {
    int target_degree = 0;
    int curve_degree = 0;
    std::vector<Monomial> rows;
    std::vector<Monomial> source;
    IntMatrix matrix;
};

/// Throws InputError unless f is homogeneous of degree >= 2.
GradedMap build_graded_map(const Polynomial& f, int r);

/// Rank of m using the given mode; block-splits first.
std::size_t graded_rank(const IntMatrix& m, const RankOptions& options, bool* fallback = nullptr);

/// dim M(f)_r = dim S_r - rank of the graded map.
long long milnor_dim(const Polynomial& f, int r, const RankOptions& options);

struct Stabilization {
    long long value = 0;
    int onset = 0;  // first degree of the final constant run

    friend bool operator==(const Stabilization&, const Stabilization&) = default;
};

struct MilnorProfile {
    int curve_degree = 0;
    int window = 3;
    std::vector<long long> dims;  // dims[r] for r = 0..r_max
    std::optional<Stabilization> stabilized;
    bool exact_fallback = false;  // certified mode had to fall back in some degree

    friend bool operator==(const MilnorProfile&, const MilnorProfile&) = default;
};

/// max(2N-3, 3N-6) + window.
int default_rmax(int curve_degree, int window);

/// Computes dims for r = 0..r_max and marks the profile stabilized when the last `window` values
/// are equal. Requires window >= 2.
MilnorProfile milnor_profile(const Polynomial& f, int r_max, const RankOptions& options,
                             int window = 3);

/// Fills `stabilized` from the tail of dims.
std::optional<Stabilization> detect_stabilization(const std::vector<long long>& dims, int window);

/// The stabilized value; throws StabilizationError when the profile never settled.
long long tjurina_from_profile(const MilnorProfile& profile);

}  // namespace curvehodge

#include "curvehodge/milnor.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "curvehodge/errors.hpp"

namespace curvehodge {

std::string_view to_string(RankMode mode) {
    switch (mode) {
        case RankMode::exact: return "exact";
        case RankMode::modular: return "modular";
        case RankMode::certified: return "certified";
    }
    return "?";
}

std::optional<RankMode> parse_rank_mode(std::string_view text) {
    if (text == "exact") return RankMode::exact;
    if (text == "modular") return RankMode::modular;
    if (text == "certified") return RankMode::certified;
    return std::nullopt;
}

long long dim_S(int r) {
    if (r < 0) return 0;
    const long long n = r;
    return (n + 2) * (n + 1) / 2;
}

namespace {

// Position of m in monomials_of_degree(m.degree()).
std::size_t grevlex_index(const Monomial& m) {
    const std::size_t d = m.degree();
    const std::size_t c = m.exp[2];
    return c * (d + 1) - c * (c - 1) / 2 + m.exp[1];
}

unsigned require_curve_degree(const Polynomial& f) {
    const auto n = degree_check(f);
    if (!n) throw InputError("polynomial must be nonzero and homogeneous");
    if (*n < 2) throw InputError("curve degree must be at least 2");
    return *n;
}

GradedMap build_from_partials(const std::array<Polynomial, 3>& partials, unsigned n, int r) {
    GradedMap map;
    map.target_degree = r;
    map.curve_degree = static_cast<int>(n);
    map.rows = monomials_of_degree(r);
    map.source = monomials_of_degree(r - static_cast<int>(n) + 1);
    const std::size_t src = map.source.size();
    map.matrix = IntMatrix(map.rows.size(), 3 * src);
    for (std::size_t g = 0; g < 3; ++g) {
        Integer denominator = 1;
        for (const auto& [m, c] : partials[g].terms()) {
            mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
        }
        for (std::size_t s = 0; s < src; ++s) {
            for (const auto& [m, c] : partials[g].terms()) {
                Monomial prod;
                for (std::size_t v = 0; v < 3; ++v) prod.exp[v] = m.exp[v] + map.source[s].exp[v];
                const Rational scaled = c * denominator;
                map.matrix(grevlex_index(prod), g * src + s) = scaled.get_num();
            }
        }
    }
    return map;
}

std::vector<std::uint64_t> choose_primes(const RankOptions& options, std::size_t count) {
    if (!options.primes.empty()) return options.primes;
    std::mt19937_64 rng(options.seed);
    return random_primes(count, kPrimeLow, kPrimeHigh, rng);
}

}  // namespace

GradedMap build_graded_map(const Polynomial& f, int r) {
    const unsigned n = require_curve_degree(f);
    return build_from_partials(partial_derivatives(f), n, r);
}

std::size_t graded_rank(const IntMatrix& m, const RankOptions& options, bool* fallback) {
    std::vector<std::uint64_t> primes;
    if (options.mode == RankMode::modular) {
        primes = choose_primes(options, 1);
        primes.resize(1);
    } else if (options.mode == RankMode::certified) {
        if (options.primes.empty() && options.prime_count == 0) {
            throw std::invalid_argument("certified mode needs at least one prime");
        }
        primes = choose_primes(options, options.prime_count);
    }
    std::size_t rank = 0;
    for (const IntMatrix& block : split_blocks(m)) {
        switch (options.mode) {
            case RankMode::exact: rank += rank_exact(block); break;
            case RankMode::modular: rank += rank_modular(block, primes.front()); break;
            case RankMode::certified: {
                const CertifiedRank c = rank_certified(block, primes);
                rank += c.rank;
                if (c.exact_fallback && fallback != nullptr) *fallback = true;
                break;
            }
        }
    }
    return rank;
}

long long milnor_dim(const Polynomial& f, int r, const RankOptions& options) {
    const GradedMap map = build_graded_map(f, r);
    return dim_S(r) - static_cast<long long>(graded_rank(map.matrix, options));
}

int default_rmax(int curve_degree, int window) {
    return std::max(2 * curve_degree - 3, 3 * curve_degree - 6) + window;
}

std::optional<Stabilization> detect_stabilization(const std::vector<long long>& dims, int window) {
    if (window < 2) throw std::invalid_argument("stabilization window must be at least 2");
    const auto w = static_cast<std::size_t>(window);
    if (dims.size() < w) return std::nullopt;
    const long long last = dims.back();
    for (std::size_t k = dims.size() - w; k < dims.size(); ++k) {
        if (dims[k] != last) return std::nullopt;
    }
    std::size_t onset = dims.size() - w;
    while (onset > 0 && dims[onset - 1] == last) --onset;
    return Stabilization{last, static_cast<int>(onset)};
}

MilnorProfile milnor_profile(const Polynomial& f, int r_max, const RankOptions& options,
                             int window) {
    if (window < 2) throw std::invalid_argument("stabilization window must be at least 2");
    if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
    const unsigned n = require_curve_degree(f);
    const auto partials = partial_derivatives(f);
    MilnorProfile profile;
    profile.curve_degree = static_cast<int>(n);
    profile.window = window;
    for (int r = 0; r <= r_max; ++r) {
        const GradedMap map = build_from_partials(partials, n, r);
        bool fallback = false;
        const auto rank = graded_rank(map.matrix, options, &fallback);
        profile.exact_fallback = profile.exact_fallback || fallback;
        profile.dims.push_back(dim_S(r) - static_cast<long long>(rank));
    }
    profile.stabilized = detect_stabilization(profile.dims, window);
    return profile;
}

long long tjurina_from_profile(const MilnorProfile& profile) {
    if (!profile.stabilized) {
        throw StabilizationError("Milnor profile did not stabilize up to degree " +
                                 std::to_string(static_cast<long long>(profile.dims.size()) - 1) +
                                 "; raise r_max");
    }
    return profile.stabilized->value;
}

}  // namespace curvehodge

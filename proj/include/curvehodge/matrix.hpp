#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "curvehodge/polynomial.hpp"

namespace curvehodge {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Every intermediate division is exact.
std::size_t rank_exact(IntMatrix m);

/// Rank of m reduced modulo the prime p (2 <= p < 2^63). Throws std::invalid_argument if p is
/// not prime. Never exceeds rank_exact(m).
std::size_t rank_modular(const IntMatrix& m, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// `count` distinct primes drawn uniformly from (lo, hi).
std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t lo, std::uint64_t hi,
                                         std::mt19937_64& rng);

struct CertifiedRank {
    std::size_t rank = 0;
    std::vector<std::size_t> modular_ranks;  // one per prime, same order
    bool exact_fallback = false;             // true when the primes disagreed
};

/// Ranks modulo every prime; if they all agree that value is returned, otherwise the exact
/// Bareiss rank is computed and returned.
CertifiedRank rank_certified(const IntMatrix& m, std::span<const std::uint64_t> primes);

/// Partitions the matrix into independent blocks: two rows share a block when some column has
/// nonzeros in both. Each returned block keeps only its rows and the columns supported on them;
/// zero columns are dropped. The rank of m is the sum of the block ranks.
std::vector<IntMatrix> split_blocks(const IntMatrix& m);

}  // namespace curvehodge

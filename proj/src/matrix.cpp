#include "curvehodge/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace curvehodge {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::size_t rank_exact(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Smallest nonzero entry as pivot keeps the minors short.
        std::size_t pivot = rows;
        std::size_t best_size = 0;
        for (std::size_t i = rank; i < rows; ++i) {
            const mpz_srcptr e = m(i, col).get_mpz_t();
            if (mpz_sgn(e) == 0) continue;
            const std::size_t size = mpz_sizeinbase(e, 2);
            if (pivot == rows || size < best_size) {
                pivot = i;
                best_size = size;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        }
        const mpz_srcptr piv = m(rank, col).get_mpz_t();
        const bool unit_prev = prev == 1;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_ptr lead = m(i, col).get_mpz_t();
            const bool lead_zero = mpz_sgn(lead) == 0;
            for (std::size_t j = col + 1; j < cols; ++j) {
                const mpz_ptr e = m(i, j).get_mpz_t();
                mpz_mul(e, e, piv);
                if (!lead_zero) mpz_submul(e, lead, m(rank, j).get_mpz_t());
                if (!unit_prev) mpz_divexact(e, e, prev.get_mpz_t());
            }
            mpz_set_ui(lead, 0);
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 e, u64 p) {
    u64 result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t lo, std::uint64_t hi,
                                         std::mt19937_64& rng) {
    if (hi <= lo + 1) throw std::invalid_argument("empty prime interval");
    std::uniform_int_distribution<u64> dist(lo + 1, hi - 1);
    std::vector<u64> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1'000'000) throw std::runtime_error("could not find enough primes");
        const u64 candidate = dist(rng);
        if (is_prime(candidate) && std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(candidate);
        }
    }
    return out;
}

std::size_t rank_modular(const IntMatrix& m, std::uint64_t p) {
    if (p >= (u64{1} << 63U) || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^63");
    }
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<u64> a(rows * cols);
    Integer reduced;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_fdiv_r_ui(reduced.get_mpz_t(), m(i, j).get_mpz_t(), p);
            a[i * cols + j] = mpz_get_ui(reduced.get_mpz_t());
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + col),
                             a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols + col));
        }
        u64* prow = &a[rank * cols];
        const u64 inv = pow_mod(prow[col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j) prow[j] = mul_mod(prow[j], inv, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            u64* row = &a[i * cols];
            const u64 factor = row[col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                const u64 sub = mul_mod(factor, prow[j], p);
                row[j] = row[j] >= sub ? row[j] - sub : row[j] + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

CertifiedRank rank_certified(const IntMatrix& m, std::span<const std::uint64_t> primes) {
    if (primes.empty()) throw std::invalid_argument("certified rank needs at least one prime");
    CertifiedRank out;
    for (u64 p : primes) out.modular_ranks.push_back(rank_modular(m, p));
    const bool agree = std::all_of(out.modular_ranks.begin(), out.modular_ranks.end(),
                                   [&](std::size_t r) { return r == out.modular_ranks.front(); });
    if (agree) {
        out.rank = out.modular_ranks.front();
    } else {
        out.rank = rank_exact(m);
        out.exact_fallback = true;
    }
    return out;
}

std::vector<IntMatrix> split_blocks(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> parent(rows);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> column_anchor(cols, none);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            if (sgn(m(i, j)) == 0) continue;
            if (column_anchor[j] == none) {
                column_anchor[j] = i;
            } else {
                const std::size_t a = find(column_anchor[j]);
                const std::size_t b = find(i);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    // Blocks are numbered by their smallest row, so the output order is deterministic.
    std::vector<std::size_t> block_of_root(rows, none);
    std::vector<std::vector<std::size_t>> block_rows;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t root = find(i);
        if (block_of_root[root] == none) {
            block_of_root[root] = block_rows.size();
            block_rows.emplace_back();
        }
        block_rows[block_of_root[root]].push_back(i);
    }
    std::vector<std::vector<std::size_t>> block_cols(block_rows.size());
    for (std::size_t j = 0; j < cols; ++j) {
        if (column_anchor[j] == none) continue;
        block_cols[block_of_root[find(column_anchor[j])]].push_back(j);
    }

    std::vector<IntMatrix> blocks;
    for (std::size_t b = 0; b < block_rows.size(); ++b) {
        if (block_cols[b].empty()) continue;  // rank 0
        IntMatrix block(block_rows[b].size(), block_cols[b].size());
        for (std::size_t i = 0; i < block_rows[b].size(); ++i)
            for (std::size_t j = 0; j < block_cols[b].size(); ++j)
                block(i, j) = m(block_rows[b][i], block_cols[b][j]);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace curvehodge

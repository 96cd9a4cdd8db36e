#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "curvehodge/curve.hpp"

namespace curvehodge {

/// Bivariate integer polynomial sum of E^{p,q} u^p v^q.
class HDPoly {
public:
    HDPoly() = default;
    HDPoly(std::initializer_list<std::pair<std::pair<int, int>, long long>> terms);

    void add(int p, int q, long long c);
    long long coefficient(int p, int q) const;
    const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }

    /// Invariant under swapping u and v.
    bool is_symmetric() const;
    long long evaluate(long long u, long long v) const;

    HDPoly& operator+=(const HDPoly& other);
    HDPoly& operator-=(const HDPoly& other);
    friend HDPoly operator+(HDPoly a, const HDPoly& b) { return a += b; }
    friend HDPoly operator-(HDPoly a, const HDPoly& b) { return a -= b; }
    friend bool operator==(const HDPoly&, const HDPoly&) = default;

private:
    std::map<std::pair<int, int>, long long> terms_;  // no zero coefficients
};

/// Highest total degree first, e.g. `u^2*v^2 - u*v + 1`.
std::string to_string(const HDPoly& p);
std::ostream& operator<<(std::ostream& os, const HDPoly& p);

/// u^2 v^2 + u v + 1.
HDPoly hd_projective_plane();

/// uv - g u - g v + 1 - sum_k (r_k - 1) for one irreducible curve of the given degree whose
/// singular points have the given germs.
HDPoly hd_irreducible(int degree, std::span<const Germ> germs);
HDPoly hd_irreducible(const Component& c);

/// r uv - (sum g)(u + v) + r - S1 - S2.
HDPoly hd_curve(const CurveSpec& spec);

/// Evaluated directly from the complement formula, then checked against P(P^2) - P(C);
/// a mismatch throws std::logic_error.
HDPoly hd_complement(const CurveSpec& spec);

struct HodgeReport {
    long long gr1 = 0;  // dim Gr^1_F H^2(U)
    long long gr2 = 0;  // dim Gr^2_F H^2(U)
    long long h1U = 0;  // r - 1
    long long h2U = 0;  // gr1 + gr2
    long long b1C = 0;
    /// Mixed Hodge numbers of H^1(C).
    long long h00 = 0;
    long long h10 = 0;
    long long h01 = 0;

    friend bool operator==(const HodgeReport&, const HodgeReport&) = default;
};

HodgeReport gr_dims(const CurveSpec& spec);

/// S1 + S2 - r + 1 + 2 sum g.
long long betti1_curve(const CurveSpec& spec);

/// (N-1)(N-2)/2 - sum_m C(m-1, 2) n_m. Needs ordinary germs and transverse intersections at
/// points smooth on every component; throws HypothesisError otherwise.
long long gr2_transverse(const CurveSpec& spec);

/// dim H^2(U) by the same expression, for rational components with ordinary singularities meeting
/// transversally (line arrangements in particular). Throws HypothesisError otherwise.
long long h2_line_arrangement(const CurveSpec& spec);

/// Gr^2 for curves whose singular points are all ordinary of multiplicity at most 4.
///
/// `as_stated` adds the correction term +b4_2 (points that are a triple point on one
/// component and smooth on another). Bookkeeping point by point gives (N-1)(N-2)/2 - n3 - 3 n4
/// without that term, which agrees with gr_dims; `resolved` is that value.
struct Mult4Gr2 {
    long long as_stated = 0;
    long long resolved = 0;
    long long b4_2 = 0;

    friend bool operator==(const Mult4Gr2&, const Mult4Gr2&) = default;
};

/// Throws HypothesisError unless every singular point is ordinary of multiplicity <= 4.
Mult4Gr2 gr2_mult4(const CurveSpec& spec);

/// sum g - r + 1 + n2 + 2 n3 + 3 n4, for curves with ordinary points of multiplicity <= 4.
long long gr2_by_point_count(const CurveSpec& spec);

}  // namespace curvehodge

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace polyforge {

// Exact rational scalar. All geometric predicates in this project are exact;
// no tolerance appears anywhere in a classification decision.
using Rat = boost::multiprecision::mpq_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

Rat parse_rational(const std::string& text);
std::string rational_to_string(const Rat& q);

// Decimal expansion with the given number of fractional digits, rounded
// toward zero. Used only for display (OFF files); never for predicates.
std::string rational_to_decimal(const Rat& q, int digits);

Rat dot(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);

// Rank of the row span, by fraction-free Gaussian elimination.
int matrix_rank(RatMat rows);

// Rank of the affine span of a point set.
int affine_rank(const std::vector<RatVec>& points);

// Solves A x = b for square nonsingular A. Throws IntegrityError otherwise.
RatVec solve_linear(RatMat a, RatVec b);

// One-dimensional nullspace vector of the row span of `rows` inside
// dimension `dim` (requires rank == dim-1). Deterministic scaling.
RatVec nullspace_vector(const RatMat& rows, int dim);

// Affine coordinate chart on the span of a point set: picks a deterministic
// affinely independent subset as origin/basis and converts points to exact
// full-dimensional coordinates.
struct AffineChart {
    RatVec origin;              // ambient coordinates
    std::vector<RatVec> basis;  // ambient direction vectors, affinely independent
    std::vector<int> basis_points; // indices of the chart-defining points

    int dim() const { return static_cast<int>(basis.size()); }
    int ambient_dim() const { return static_cast<int>(origin.size()); }

    RatVec to_chart(const RatVec& ambient) const;
    RatVec from_chart(const RatVec& chart) const;
};

AffineChart build_chart(const std::vector<RatVec>& points);

// Oriented hyperplane a.x = c in chart coordinates; the reference side is
// kept strictly negative (a.x < c).
struct Hyperplane {
    RatVec normal;
    Rat offset;

    // -1 below (reference side), 0 on, +1 above.
    int side(const RatVec& p) const;
};

// Hyperplane through `points` (which must affinely span it), oriented so
// that `below` is strictly on the negative side.
Hyperplane hyperplane_through(const std::vector<RatVec>& points, const RatVec& below);

// Canonical key identifying an oriented hyperplane (scale-normalized).
std::vector<Rat> hyperplane_key(const Hyperplane& h);

} // namespace polyforge

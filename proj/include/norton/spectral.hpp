#pragma once

#include "norton/graphs.hpp"
#include "norton/matrix.hpp"

#include <cstddef>
#include <vector>

namespace norton {

// A_i[x][y] = 1 iff d(x,y) = i, for i = 0..diameter.
std::vector<RationalMatrix> adjacency_matrices(const GraphInstance& g);

/*
 * Spectrum of a distance regular graph. Elements of the adjacency algebra are
 * stored by their coordinates in the distance basis A_0..A_d, so an
 * idempotent costs d+1 rationals; dense matrices are produced on request.
 */
struct SpectralData {
    std::vector<long> eigenvalues;    // strictly decreasing
    std::vector<long> multiplicities; // same order
    std::vector<Vector> idempotent_coordinates; // E_i = sum_j coords[i][j] A_j
    Vector minimal_polynomial;                  // coefficients, constant term first, monic
    IntersectionArray intersection;
    std::size_t vertex_count = 0;
    std::vector<std::uint8_t> dist;

    int diameter() const { return intersection.diameter; }
    RationalMatrix idempotent(int i) const;
};

// Throws NotDistanceRegular, or VerificationFailure when a root is not integral.
SpectralData compute_spectrum(const GraphInstance& g);

// E_i v.
Vector project(const SpectralData& s, int i, const Vector& v);

// Product in the adjacency algebra, both factors in distance-basis coordinates.
Vector algebra_product(const IntersectionArray& p, const Vector& a, const Vector& b);

long closed_form_eigenvalue(const FamilySpec& f, int i);
long closed_form_multiplicity(const FamilySpec& f, int i);

} // namespace norton

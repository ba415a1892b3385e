#pragma once

#include "norton/binop.hpp"
#include "norton/classify.hpp"
#include "norton/norton.hpp"

#include <random>

namespace testing_support {

using namespace norton;

// x_i * x_i = x_i and x_i * x_j = c (x_i + x_j) on n-1 vectors, c = -1/(n-2):
// the J(n,1) product written down by hand.
inline BilinearOperation complete_graph_algebra(int n) {
    const std::size_t dim = static_cast<std::size_t>(n - 1);
    const Rational c(-1, n - 2);
    Vector constants(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j) {
                constants[(i * dim + j) * dim + i] = 1;
            } else {
                constants[(i * dim + j) * dim + i] += c;
                constants[(i * dim + j) * dim + j] += c;
            }
        }
    return BilinearOperation::bilinear(dim, std::move(constants));
}

inline BilinearOperation random_operation(std::mt19937& rng, std::size_t dim, int range = 2) {
    std::uniform_int_distribution<int> pick(-range, range);
    Vector constants(dim * dim * dim);
    for (auto& c : constants) c = pick(rng);
    return BilinearOperation::bilinear(dim, std::move(constants));
}

struct Built {
    FamilyInstance inst;
    SpectralData spectrum;
    NortonAlgebra algebra;
};

inline Built build_all(const FamilySpec& f) {
    FamilyInstance inst = build_family(f);
    SpectralData s = compute_spectrum(inst.graph);
    NortonAlgebra alg = structure_constants(inst, s);
    return {std::move(inst), std::move(s), std::move(alg)};
}

inline std::size_t count(const std::vector<std::vector<std::size_t>>& classes) { return classes.size(); }

} // namespace testing_support

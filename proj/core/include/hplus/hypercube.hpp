#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hplus/matrix.hpp"

namespace hplus {

/// The cube graph on {0,1}^n: vertices are bit masks, edges join masks at
/// Hamming distance 1. Equivalently the Cayley graph of Z_2^n with the
/// coordinate flips as generators.
class CubeGraph {
public:
    explicit CubeGraph(int n);

    int dimension() const { return n_; }
    std::size_t vertex_count() const { return std::size_t{1} << n_; }
    /// Dense symmetric 0/1 adjacency matrix.
    const Matrix<std::int64_t>& adjacency() const { return adjacency_; }
    /// Neighbors read off the adjacency matrix.
    const std::vector<std::uint32_t>& neighbors(std::size_t v) const { return neighbors_[v]; }

private:
    int n_;
    Matrix<std::int64_t> adjacency_;
    std::vector<std::vector<std::uint32_t>> neighbors_;
};

inline constexpr int kMaxSpectrumDimension = 10;
inline constexpr int kMaxDistanceAlgebraDimension = 6;

struct SpectrumReport {
    int n = 0;
    std::size_t vectors_checked = 0;
    /// Every character vector v_i satisfied A v_i = (sum_j (-1)^{i_j}) v_i exactly.
    bool eigen_equations_hold = false;
    /// eigenvalue -> multiplicity.
    std::map<int, std::int64_t> multiplicities;
    bool multiplicities_binomial = false;
    bool regular = false;
    bool bipartite = false;
};

SpectrumReport spectrum_check(int n);

struct DistanceAlgebraReport {
    int n = 0;
    /// coefficients[m-1][l]: coefficient of d_l (d_0 = identity) in d_1^m, m = 1..n.
    std::vector<std::vector<std::int64_t>> coefficients;
    /// Each power equals its expansion entrywise.
    bool expansions_exact = false;
    bool coefficients_nonnegative = false;
    /// Coefficients vanish above the diagonal and the diagonal is positive.
    bool triangular = false;
    bool classes_commute = false;
    std::size_t power_span_rank = 0;
    std::size_t class_span_rank = 0;
    std::size_t joint_rank = 0;
    /// span{1, d_1, ..., d_1^n} == span{1, d_1, ..., d_n}.
    bool spans_equal = false;
    /// Eigenvalues of the distance matrix sum_l sqrt(l) d_l on the n+1
    /// eigenspaces, and whether they are pairwise distinct.
    std::vector<double> distance_eigenvalues;
    bool distance_eigenvalues_distinct = false;
};

DistanceAlgebraReport distance_algebra_check(int n);

}  // namespace hplus

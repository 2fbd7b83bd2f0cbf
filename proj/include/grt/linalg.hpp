#pragma once
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grt/graph.hpp"

namespace grt {

// One eigenvalue group after tolerance clustering.
struct EigenGroup {
    double value = 0;            // representative (mean of the cluster)
    int multiplicity = 0;
    Eigen::MatrixXd basis;       // n x multiplicity, orthonormal columns
};

// Full symmetric eigendecomposition with eigenvalues clustered at `tol`,
// groups sorted by value descending (index 0 = largest).
struct Spectrum {
    std::vector<EigenGroup> groups;
    double tol = 1e-5;
    int n = 0;

    const EigenGroup& group(int index1) const;   // 1-based, 1 = largest
    int distinct() const { return static_cast<int>(groups.size()); }
    // multiset signature [(value, multiplicity), ...] descending
    std::vector<std::pair<double, int>> signature() const;
};

struct Subspace {
    Eigen::MatrixXd basis;       // n x k, orthonormal columns
    int dim() const { return static_cast<int>(basis.cols()); }
    int ambient() const { return static_cast<int>(basis.rows()); }
};

// default eigenvalue clustering tolerance (two eigenvalues within 1e-5 are
// treated as equal, matching the numeric workflow this mirrors)
inline constexpr double kGroupTol = 1e-5;

// Deterministic dense symmetric eigendecomposition. Rejects asymmetric input
// (max |A - A^T| > 1e-10). Within each group the basis is re-orthonormalized
// by modified Gram-Schmidt with one re-pass.
Spectrum eigendecompose(const Eigen::MatrixXd& a, double tol = kGroupTol);

// lambda = deg(G) - theta for regular g
double laplacian_eigenvalue(const Graph& g, double theta);

Eigen::VectorXd project(const Subspace& u, const Eigen::VectorXd& x);

enum class SubspaceRelation { equal, contained, orthogonal, non_orthogonal, incomparable };

// Classification of span(u1) against span(u2) via principal angles:
//   equal         mutual containment
//   contained     u1 ⊆ u2 (strictly)
//   orthogonal    every cross inner product ≤ tol
//   non_orthogonal  u2 ⊂ u1 (comparable, reverse direction)
//   incomparable  overlapping, no containment either way
SubspaceRelation subspace_relation(const Subspace& u1, const Subspace& u2,
                                   double tol = 1e-7);

std::string to_string(SubspaceRelation r);

// Orthonormal basis of the column span (rank-revealing; k = numerical rank at
// relative threshold 1e-12)
Subspace column_space(const Eigen::MatrixXd& m);

// numerical rank with relative singular-value threshold
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

} // namespace grt

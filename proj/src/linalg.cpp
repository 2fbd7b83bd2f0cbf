#include "grt/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace grt {

const EigenGroup& Spectrum::group(int index1) const {
    if (index1 < 1 || index1 > distinct())
        throw precondition_error("eigenvalue index out of range (1.." +
                                 std::to_string(distinct()) + ")");
    return groups[index1 - 1];
}

std::vector<std::pair<double, int>> Spectrum::signature() const {
    std::vector<std::pair<double, int>> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.emplace_back(g.value, g.multiplicity);
    return out;
}

namespace {

// modified Gram-Schmidt with one re-pass; input columns are expected to be
// nearly orthonormal already (they come out of the eigensolver)
void reorthonormalize(Eigen::MatrixXd& b) {
    for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k < b.cols(); ++k) {
            for (int p = 0; p < k; ++p) b.col(k) -= b.col(p).dot(b.col(k)) * b.col(p);
            double nrm = b.col(k).norm();
            if (nrm < 1e-12)
                throw precondition_error("degenerate eigenbasis block");
            b.col(k) /= nrm;
        }
}

} // namespace

Spectrum eigendecompose(const Eigen::MatrixXd& a, double tol) {
    if (a.rows() != a.cols()) throw precondition_error("matrix must be square");
    if (tol <= 0) throw precondition_error("grouping tolerance must be positive");
    int n = static_cast<int>(a.rows());
    if (n == 0) throw precondition_error("empty matrix");
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw precondition_error("matrix is not symmetric");

    Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw precondition_error("eigendecomposition failed to converge");
    Eigen::VectorXd vals = solver.eigenvalues();      // ascending
    Eigen::MatrixXd vecs = solver.eigenvectors();

    Spectrum s;
    s.tol = tol;
    s.n = n;
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && vals(hi) - vals(hi - 1) <= tol) ++hi;
        EigenGroup g;
        g.multiplicity = hi - lo;
        g.value = vals.segment(lo, g.multiplicity).mean();
        g.basis = vecs.middleCols(lo, g.multiplicity);
        reorthonormalize(g.basis);
        s.groups.push_back(std::move(g));
        lo = hi;
    }
    std::reverse(s.groups.begin(), s.groups.end());   // descending by value
    return s;
}

double laplacian_eigenvalue(const Graph& g, double theta) {
    auto deg = g.regular_degree();
    if (!deg) throw precondition_error("laplacian_eigenvalue needs a regular graph");
    return static_cast<double>(*deg) - theta;
}

Eigen::VectorXd project(const Subspace& u, const Eigen::VectorXd& x) {
    if (x.size() != u.basis.rows())
        throw precondition_error("projection: ambient dimension mismatch");
    return u.basis * (u.basis.transpose() * x);
}

namespace {

// largest column norm of B1 - P2 B1, i.e. the sine of the largest principal
// angle of span(b1) into span(b2) (for orthonormal inputs)
double containment_defect(const Eigen::MatrixXd& b1, const Eigen::MatrixXd& b2) {
    Eigen::MatrixXd resid = b1 - b2 * (b2.transpose() * b1);
    double worst = 0;
    for (int k = 0; k < resid.cols(); ++k) worst = std::max(worst, resid.col(k).norm());
    return worst;
}

} // namespace

SubspaceRelation subspace_relation(const Subspace& u1, const Subspace& u2, double tol) {
    if (u1.ambient() != u2.ambient())
        throw precondition_error("subspace_relation: ambient dimension mismatch");
    bool fwd = u1.dim() <= u2.dim() && containment_defect(u1.basis, u2.basis) <= tol;
    bool bwd = u2.dim() <= u1.dim() && containment_defect(u2.basis, u1.basis) <= tol;
    if (fwd && bwd) return SubspaceRelation::equal;
    if (fwd) return SubspaceRelation::contained;
    if ((u1.basis.transpose() * u2.basis).cwiseAbs().maxCoeff() <= tol)
        return SubspaceRelation::orthogonal;
    if (bwd) return SubspaceRelation::non_orthogonal;   // comparable, reverse direction
    return SubspaceRelation::incomparable;
}

std::string to_string(SubspaceRelation r) {
    switch (r) {
        case SubspaceRelation::equal: return "equal";
        case SubspaceRelation::contained: return "contained";
        case SubspaceRelation::orthogonal: return "orthogonal";
        case SubspaceRelation::non_orthogonal: return "non-orthogonal";
        case SubspaceRelation::incomparable: return "incomparable";
    }
    return "?";
}

Subspace column_space(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    double cutoff = 1e-12 * (svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > cutoff) ++rank;
    Subspace s;
    s.basis = svd.matrixU().leftCols(rank);
    return s;
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    if (svd.singularValues().size() == 0) return 0;
    double cutoff = rel_tol * svd.singularValues()(0);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > cutoff) ++rank;
    return rank;
}

} // namespace grt

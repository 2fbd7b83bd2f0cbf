#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "grt/graph.hpp"
#include "grt/linalg.hpp"
#include "grt/symmetry.hpp"

namespace grt {

// n x d arrangement matrix; row i is the position of vertex i. Always of full
// dimension (rank d) — make_realization rejects rank-deficient input.
struct Realization {
    Graph graph;
    Eigen::MatrixXd m;     // n x d

    int n() const { return static_cast<int>(m.rows()); }
    int d() const { return static_cast<int>(m.cols()); }
    Eigen::RowVectorXd vertex(int i) const { return m.row(i); }
};

// validates shape and rank (singular-value threshold 1e-8 relative)
Realization make_realization(Graph g, Eigen::MatrixXd m);

// column span of M inside R^n
Subspace arrangement_space(const Realization& r);

// Orthogonal maps realizing the group's permutations on the point set:
// T_sigma v_i = v_{sigma(i)}. Stores the least-squares context so T can be
// computed for arbitrary group elements, not only generators.
struct Representation {
    std::vector<Eigen::MatrixXd> generator_maps;  // aligned with group.generators
    Eigen::MatrixXd m;                            // source arrangement matrix
    Eigen::MatrixXd lsq;                          // (M^T M)^{-1} M^T, d x n

    int d() const { return static_cast<int>(m.cols()); }
    // least-squares T for any permutation of the vertex set
    Eigen::MatrixXd at(const Perm& sigma) const;
};

struct ExtractionResult {
    std::optional<Representation> rep;    // set on success
    int failed_generator = -1;            // index into group.generators
    double max_residual = 0;  // max over generators of |P_sigma^T M - M T^T|_max / |M|_max
    double max_orthogonality_defect = 0;  // max over generators of |T^T T - I|_max
    bool ok() const { return rep.has_value(); }
};

// Solves M T^T = P_sigma^T M per generator in least squares (so that
// T v_i = v_{sigma(i)} row-wise), then verifies both the residual and the
// orthogonality of T within tol. A failed verification is the genuine
// negative signal (e.g. the rectangle under the full square group).
ExtractionResult extract_representation(const Realization& r, const PermGroup& group,
                                        double tol = 1e-6);

// index1: 1 = largest eigenvalue. M = orthonormal eigenbasis, d = multiplicity.
Realization spectral_realization(const Graph& g, int index1, double tol = kGroupTol);

// theta if |AM - theta M|_max <= tol * |M|_max, with theta the Rayleigh
// estimate tr(M^T A M)/tr(M^T M)
std::optional<double> is_balanced(const Realization& r, double tol = 1e-8);

// balanced and d equals the multiplicity of theta in the spectrum
std::optional<double> is_spectral(const Realization& r, double tol = 1e-8,
                                  double group_tol = kGroupTol);

// equivalent realization with M^T M = I (thin orthonormalization; span kept)
Realization normalize(const Realization& r);

enum class SphericityKind { normalized, spherical, neither };
struct SphericityResult {
    SphericityKind kind = SphericityKind::neither;
    double alpha = 0;              // tr(M^T M)/d
};
SphericityResult sphericity(const Realization& r, double tol = 1e-8);

// same arrangement space; for (near-)normalized inputs also recovers the
// orthogonal T with M1 = M2 T^T and checks it entrywise
bool equivalent(const Realization& r1, const Realization& r2, double tol = 1e-7);

struct IrreducibilityResult {
    bool irreducible = false;
    int samples_used = 0;
    double max_scalar_defect = 0;          // max over samples of |S - (tr S/d) I|_max / |S|_max
    std::optional<Eigen::MatrixXd> witness; // d x k invariant-subspace basis when reducible
};

// Reynolds averaging: S = (1/|G|) sum_sigma T_sigma S0 T_sigma^T for random
// symmetric S0. All-scalar S over `samples` draws (>= 3) reports irreducible;
// a non-scalar S yields an eigenblock of S as invariant-subspace witness.
// Enumerates the group when order <= kGroupCap; otherwise iterates averaging
// over batches of 64 random generator words (mixed lengths 16..47, so no
// parity class of the generators is ever favored) until the batch average
// stops moving — the fixed point is the same commutant projection.
IrreducibilityResult irreducibility_test(const Realization& r, const PermGroup& group,
                                         int samples = 3, std::uint64_t seed = 0,
                                         double tol = 1e-6);

// recursive splitting along witnesses; components are Sigma-realizations whose
// arrangement spaces direct-sum to the input's
std::vector<Realization> irreducible_components(const Realization& r, const PermGroup& group,
                                                std::uint64_t seed = 0);

// u = M x; for a theta-balanced realization this is a theta-eigenvector
Eigen::VectorXd eigenvector_from_realization(const Realization& r, const Eigen::VectorXd& x);

// v_i := T_{sigma_i}(seed_point) with sigma_i(base) = i chosen by BFS over the
// generators; requires a vertex-transitive group and a seed point fixed by the
// stabilizer maps (within 1e-8); cross-checks well-definedness
Realization build_from_representation(const Graph& g, const PermGroup& group,
                                      const Representation& rep,
                                      const Eigen::VectorXd& seed_point, int base_vertex);

// rescale each vertex orbit; alphas indexed by orbits_vertices(group) order
Realization scale_orbits(const Realization& r, const PermGroup& group,
                         const std::vector<double>& alphas);

} // namespace grt

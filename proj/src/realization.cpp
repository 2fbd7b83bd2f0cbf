#include "grt/realization.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "grt/prng.hpp"

namespace grt {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw precondition_error(msg);
}

// (P_sigma^T M)_i = M_{sigma(i)}: the target of the defining equation
// M T^T = P_sigma^T M, i.e. T v_i = v_{sigma(i)} row by row
Eigen::MatrixXd pulled_rows(const Eigen::MatrixXd& m, const Perm& sigma) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) out.row(i) = m.row(sigma(i));
    return out;
}

bool near_normalized(const Eigen::MatrixXd& m) {
    int d = static_cast<int>(m.cols());
    return (m.transpose() * m - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-6;
}

} // namespace

Realization make_realization(Graph g, Eigen::MatrixXd m) {
    require(m.rows() == g.n(), "arrangement matrix needs one row per vertex");
    require(m.cols() >= 1 && m.cols() <= m.rows(), "arrangement dimension must be in [1, n]");
    require(numerical_rank(m) == m.cols(), "arrangement matrix must have full column rank");
    return Realization{std::move(g), std::move(m)};
}

Subspace arrangement_space(const Realization& r) { return column_space(r.m); }

Eigen::MatrixXd Representation::at(const Perm& sigma) const {
    return (lsq * pulled_rows(m, sigma)).transpose();
}

ExtractionResult extract_representation(const Realization& r, const PermGroup& group,
                                        double tol) {
    require(group.n == r.n(), "group degree must match the vertex count");
    ExtractionResult out;
    Representation rep;
    rep.m = r.m;
    rep.lsq = (r.m.transpose() * r.m).ldlt().solve(r.m.transpose());
    const int d = r.d();
    const double scale = r.m.cwiseAbs().maxCoeff();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
    for (std::size_t gi = 0; gi < group.generators.size(); ++gi) {
        Eigen::MatrixXd target = pulled_rows(r.m, group.generators[gi]);
        Eigen::MatrixXd tt = rep.lsq * target;   // T^T, the least-squares fit
        double residual = (r.m * tt - target).cwiseAbs().maxCoeff() / scale;
        double defect = (tt * tt.transpose() - eye).cwiseAbs().maxCoeff();
        out.max_residual = std::max(out.max_residual, residual);
        out.max_orthogonality_defect = std::max(out.max_orthogonality_defect, defect);
        if ((residual > tol || defect > tol) && out.failed_generator < 0)
            out.failed_generator = static_cast<int>(gi);
        rep.generator_maps.push_back(tt.transpose());
    }
    if (out.failed_generator < 0) out.rep = std::move(rep);
    return out;
}

Realization spectral_realization(const Graph& g, int index1, double tol) {
    Spectrum sp = eigendecompose(g.adjacency(), tol);
    require(index1 >= 1 && index1 <= sp.distinct(), "eigenvalue index out of range");
    return make_realization(g, sp.group(index1).basis);
}

std::optional<double> is_balanced(const Realization& r, double tol) {
    Eigen::MatrixXd am = r.graph.adjacency() * r.m;
    double theta = (r.m.transpose() * am).trace() / (r.m.transpose() * r.m).trace();
    double resid = (am - theta * r.m).cwiseAbs().maxCoeff();
    if (resid > tol * r.m.cwiseAbs().maxCoeff()) return std::nullopt;
    return theta;
}

std::optional<double> is_spectral(const Realization& r, double tol, double group_tol) {
    std::optional<double> theta = is_balanced(r, tol);
    if (!theta) return std::nullopt;
    Spectrum sp = eigendecompose(r.graph.adjacency(), group_tol);
    for (const EigenGroup& grp : sp.groups)
        if (std::abs(grp.value - *theta) <= group_tol)
            return grp.multiplicity == r.d() ? theta : std::nullopt;
    return std::nullopt;
}

Realization normalize(const Realization& r) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(r.m);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(r.n(), r.d());
    return make_realization(r.graph, std::move(q));
}

SphericityResult sphericity(const Realization& r, double tol) {
    Eigen::MatrixXd gram = r.m.transpose() * r.m;
    SphericityResult out;
    out.alpha = gram.trace() / r.d();
    double defect =
        (gram - out.alpha * Eigen::MatrixXd::Identity(r.d(), r.d())).cwiseAbs().maxCoeff();
    if (defect <= tol * std::max(1.0, gram.cwiseAbs().maxCoeff()))
        out.kind = std::abs(out.alpha - 1.0) <= tol ? SphericityKind::normalized
                                                    : SphericityKind::spherical;
    return out;
}

bool equivalent(const Realization& r1, const Realization& r2, double tol) {
    require(r1.graph == r2.graph, "equivalence compares realizations of the same graph");
    if (subspace_relation(arrangement_space(r1), arrangement_space(r2), tol) !=
        SubspaceRelation::equal)
        return false;
    // second route for normalized inputs: the change of basis T = M2^T M1 must
    // reproduce M1 exactly and be orthogonal
    if (near_normalized(r1.m) && near_normalized(r2.m) && r1.d() == r2.d()) {
        Eigen::MatrixXd t = r2.m.transpose() * r1.m;
        if ((r2.m * t - r1.m).cwiseAbs().maxCoeff() > tol) return false;
        int d = r1.d();
        if ((t.transpose() * t - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
            return false;
    }
    return true;
}

IrreducibilityResult irreducibility_test(const Realization& r, const PermGroup& group,
                                         int samples, std::uint64_t seed, double tol) {
    require(samples >= 3, "at least three independent samples are required");
    ExtractionResult ext = extract_representation(r, group);
    require(ext.ok(),
            "irreducibility is defined for Sigma-realizations only; "
            "representation extraction failed");
    const Representation& rep = *ext.rep;
    const int d = r.d();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);

    std::vector<Eigen::MatrixXd> maps;
    const bool exhaustive = group.order <= kGroupCap;
    if (exhaustive)
        for (const Perm& sigma : group.enumerate()) maps.push_back(rep.at(sigma));

    SplitMix64 rng(seed);
    IrreducibilityResult out;
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXd avg(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) avg(i, j) = avg(j, i) = rng.uniform01();

        if (exhaustive) {
            Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
            for (const Eigen::MatrixXd& t : maps) sum += t * avg * t.transpose();
            avg = sum / static_cast<double>(maps.size());
        } else {
            // One batch of random words has O(1/sqrt(64)) sampling noise, far
            // above tol; but conjugation by orthogonal maps never expands the
            // operator, and everything in the commutant is a fixed point, so
            // iterating the batch average converges to the exact projection.
            // Mixed word lengths keep every coset of every proper normal
            // subgroup (parity included) in play.
            for (int pass = 0; pass < 200; ++pass) {
                Eigen::MatrixXd next = Eigen::MatrixXd::Zero(d, d);
                for (int w = 0; w < 64; ++w) {
                    Eigen::MatrixXd t = eye;
                    std::uint64_t len = 16 + rng.below(32);
                    for (std::uint64_t step = 0; step < len; ++step)
                        t = rep.generator_maps[rng.below(rep.generator_maps.size())] * t;
                    next += t * avg * t.transpose();
                }
                next /= 64.0;
                double delta = (next - avg).cwiseAbs().maxCoeff();
                avg = next;
                if (delta <= 1e-12) break;
            }
        }

        double defect =
            (avg - (avg.trace() / d) * eye).cwiseAbs().maxCoeff() / avg.cwiseAbs().maxCoeff();
        out.max_scalar_defect = std::max(out.max_scalar_defect, defect);
        out.samples_used = s + 1;
        if (defect > tol) {
            // a non-scalar averaged operator commutes with the whole image, so
            // any of its proper eigenspaces is an invariant subspace
            Spectrum sp = eigendecompose(avg, 1e-8);
            for (const EigenGroup& grp : sp.groups)
                if (grp.multiplicity < d) {
                    out.witness = grp.basis;
                    break;
                }
            return out;
        }
    }
    out.irreducible = true;
    return out;
}

std::vector<Realization> irreducible_components(const Realization& r, const PermGroup& group,
                                                std::uint64_t seed) {
    IrreducibilityResult res = irreducibility_test(r, group, 3, seed);
    if (res.irreducible || !res.witness) return {r};
    const Eigen::MatrixXd& w = *res.witness;
    // the witness is an eigenblock of a symmetric operator that commutes with
    // every T, so its orthogonal complement is invariant as well
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd wc = q.rightCols(r.d() - w.cols());
    SplitMix64 child(seed ^ 0x5851F42D4C957F2Dull);
    std::uint64_t s1 = child.next(), s2 = child.next();
    std::vector<Realization> out =
        irreducible_components(make_realization(r.graph, r.m * w), group, s1);
    std::vector<Realization> rest =
        irreducible_components(make_realization(r.graph, r.m * wc), group, s2);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

Eigen::VectorXd eigenvector_from_realization(const Realization& r, const Eigen::VectorXd& x) {
    require(x.size() == r.d(), "coordinate vector must have length d");
    return r.m * x;
}

Realization build_from_representation(const Graph& g, const PermGroup& group,
                                      const Representation& rep,
                                      const Eigen::VectorXd& seed_point, int base_vertex) {
    const int n = g.n();
    require(group.n == n, "group degree must match the graph");
    require(base_vertex >= 0 && base_vertex < n, "base vertex out of range");
    require(rep.generator_maps.size() == group.generators.size(),
            "one generator map per group generator is required");
    const int d = static_cast<int>(seed_point.size());
    for (const Eigen::MatrixXd& t : rep.generator_maps)
        require(t.rows() == d && t.cols() == d, "generator maps must be d x d");

    // spread the seed over the orbit: point[v] = T_g point[u] along BFS tree
    // edges, so point[v] = T_w (seed) for a word w with w(base) = v
    std::vector<Eigen::VectorXd> point(n);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{base_vertex};
    point[base_vertex] = seed_point;
    seen[base_vertex] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (std::size_t gi = 0; gi < group.generators.size(); ++gi) {
            int v = group.generators[gi](u);
            if (!seen[v]) {
                point[v] = rep.generator_maps[gi] * point[u];
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        require(seen[v] != 0, "group must act transitively on the vertices");

    // Well-definedness across non-tree edges. Two words reaching the same
    // vertex differ by a stabilizer element, so a mismatch here is exactly a
    // seed point that the stabilizer maps fail to fix.
    double scale = std::max(1.0, seed_point.cwiseAbs().maxCoeff());
    for (int u = 0; u < n; ++u)
        for (std::size_t gi = 0; gi < group.generators.size(); ++gi) {
            int v = group.generators[gi](u);
            double gap = (rep.generator_maps[gi] * point[u] - point[v]).cwiseAbs().maxCoeff();
            require(gap <= 1e-7 * scale,
                    "seed point is not fixed by the stabilizer of the base vertex");
        }

    Eigen::MatrixXd m(n, d);
    for (int v = 0; v < n; ++v) m.row(v) = point[v].transpose();
    return make_realization(g, std::move(m));
}

Realization scale_orbits(const Realization& r, const PermGroup& group,
                         const std::vector<double>& alphas) {
    require(group.n == r.n(), "group degree must match the vertex count");
    std::vector<std::vector<int>> orbs = orbits_vertices(group);
    require(alphas.size() == orbs.size(), "one scale factor per vertex orbit is required");
    Eigen::MatrixXd m = r.m;
    for (std::size_t o = 0; o < orbs.size(); ++o)
        for (int v : orbs[o]) m.row(v) *= alphas[o];
    return make_realization(r.graph, std::move(m));
}

} // namespace grt

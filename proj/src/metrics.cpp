#include "grt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "grt/symmetry.hpp"

namespace grt {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw precondition_error(msg);
}

const double kPi = 3.14159265358979323846;

} // namespace

double radius(const Realization& r) {
    return std::sqrt((r.m.transpose() * r.m).trace() / r.n());
}

MetricReport metric_report(const Realization& r, const PermGroup& group) {
    require(group.n == r.n(), "group degree must match the vertex count");
    TransitivityFlags flags = transitivity_class(r.graph, group);
    require(flags.vertex, "metric report needs a vertex-transitive action");
    require(flags.edge, "metric report needs an edge-transitive action");
    require(extract_representation(r, group).ok(),
            "metric report needs a realization of the given group");
    std::optional<double> theta = is_balanced(r);
    require(theta.has_value(), "metric report needs a balanced realization");

    int deg = *r.graph.regular_degree();   // vertex-transitive implies regular
    MetricReport out;
    out.theta = *theta;
    out.lambda = deg - *theta;
    out.radius = radius(r);

    // direct row computations over every edge; the transitivity hypotheses
    // promise common values, and the spread check verifies that promise
    // instead of trusting it
    double omega_lo = 0, omega_hi = 0, len2_lo = 0, len2_hi = 0;
    double omega_sum = 0, len2_sum = 0;
    bool first = true;
    for (const auto& [i, j] : r.graph.edges()) {
        double w = r.m.row(i).dot(r.m.row(j));
        double l2 = (r.m.row(i) - r.m.row(j)).squaredNorm();
        if (first) {
            omega_lo = omega_hi = w;
            len2_lo = len2_hi = l2;
            first = false;
        }
        omega_lo = std::min(omega_lo, w);
        omega_hi = std::max(omega_hi, w);
        len2_lo = std::min(len2_lo, l2);
        len2_hi = std::max(len2_hi, l2);
        omega_sum += w;
        len2_sum += l2;
    }
    double scale = std::max(1.0, out.radius * out.radius);
    require(omega_hi - omega_lo <= 1e-8 * scale, "edge inner products are not constant");
    require(len2_hi - len2_lo <= 1e-8 * scale, "edge lengths are not constant");
    double e = static_cast<double>(r.graph.edge_count());
    out.omega = omega_sum / e;
    out.length = std::sqrt(len2_sum / e);
    out.cosine = out.omega / (out.radius * out.radius);
    out.relative_length = out.length / out.radius;

    // cross-check the direct values against the closed forms they must equal
    SphericityResult sph = sphericity(r);
    if (sph.kind == SphericityKind::normalized) {
        require(std::abs(out.omega - out.theta * r.d() / (2.0 * e)) <= 1e-8,
                "omega disagrees with the closed form for normalized input");
        require(std::abs(out.length * out.length - out.lambda * r.d() / e) <= 1e-8,
                "length disagrees with the closed form for normalized input");
    }
    if (sph.kind != SphericityKind::neither) {
        require(std::abs(out.cosine - out.theta / deg) <= 1e-8,
                "cosine disagrees with theta/deg for spherical input");
        require(std::abs(out.relative_length * out.relative_length - 2.0 * out.lambda / deg) <=
                    1e-8,
                "relative length disagrees with 2*lambda/deg for spherical input");
    }
    return out;
}

MetricReport metric_report(const Realization& r) {
    return metric_report(r, automorphism_group(r.graph));
}

double circumradius_at_unit_edge(const Graph& g, double theta) {
    std::optional<int> deg = g.regular_degree();
    require(deg.has_value(), "circumradius formula needs a regular graph");
    require(theta < *deg, "theta must lie below the vertex degree");
    return std::sqrt(*deg / (2.0 * (*deg - theta)));
}

double dihedral_angle_from_dual(const Graph& g_dual, double theta) {
    std::optional<int> deg = g_dual.regular_degree();
    require(deg.has_value(), "dihedral-angle formula needs a regular dual graph");
    double c = theta / *deg;
    require(c >= -1.0 && c <= 1.0, "theta/deg must be a valid cosine");
    return 180.0 - std::acos(c) * (180.0 / kPi);
}

double theta_from_metrics(double deg, double rel_length) {
    return deg * (1.0 - 0.5 * rel_length * rel_length);
}

} // namespace grt

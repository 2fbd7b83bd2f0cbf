#pragma once
#include "grt/realization.hpp"

namespace grt {

// Metric quantities of a balanced vertex- and edge-transitive realization.
// For normalized input: omega = theta d / (2|E|), length^2 = lambda d / |E|;
// for spherical input: cosine = theta/deg, relative_length^2 = 2 lambda/deg.
struct MetricReport {
    double radius = 0;           // sqrt(tr(M^T M)/n)
    double omega = 0;            // common edge inner product <v_i, v_j>
    double length = 0;           // common edge length
    double cosine = 0;           // omega / radius^2
    double relative_length = 0;  // length / radius
    double theta = 0;
    double lambda = 0;           // deg - theta
};

double radius(const Realization& r);

// Verifies its own preconditions: vertex- and edge-transitivity of the group
// and balancedness of r (the closed forms are only valid under them); all
// fields are cross-checked against direct row computations.
MetricReport metric_report(const Realization& r, const PermGroup& group);
// convenience: group = automorphism_group(r.graph)
MetricReport metric_report(const Realization& r);

// r(v) = sqrt(deg / (2 (deg - theta))) for the unit-edge rescaling; requires
// regular g and theta < deg
double circumradius_at_unit_edge(const Graph& g, double theta);

// 180 - arccos(theta/deg) in degrees
double dihedral_angle_from_dual(const Graph& g_dual, double theta);

// theta = deg (1 - rel_length^2 / 2)
double theta_from_metrics(double deg, double rel_length);

} // namespace grt

#include <cmath>
#include <vector>

#include "doctest.h"
#include "grt/graph.hpp"
#include "grt/metrics.hpp"
#include "grt/realization.hpp"
#include "grt/symmetry.hpp"

using namespace grt;

namespace {

const double kPi = 3.14159265358979323846;

Realization hexagon() {
    Eigen::MatrixXd m(6, 2);
    for (int i = 0; i < 6; ++i) {
        m(i, 0) = std::cos(kPi / 3.0 * i);
        m(i, 1) = std::sin(kPi / 3.0 * i);
    }
    return make_realization(catalog("cycle", {6}), m);
}

} // namespace

TEST_CASE("radius of normalized and coordinate realizations") {
    CHECK(std::abs(radius(spectral_realization(catalog("dodecahedron"), 2)) -
                   std::sqrt(3.0 / 20.0)) <= 1e-12);
    CHECK(std::abs(radius(spectral_realization(catalog("complete", {5}), 1)) -
                   std::sqrt(1.0 / 5.0)) <= 1e-12);
    // the 24-cell construction coordinates put every vertex at distance sqrt(2)
    Realization c24 = make_realization(catalog("cell24"), *catalog_coordinates("cell24"));
    CHECK(std::abs(radius(c24) - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("metric report of the dodecahedron spectral realization") {
    Realization r = spectral_realization(catalog("dodecahedron"), 2);
    MetricReport rep = metric_report(r);
    double rt5 = std::sqrt(5.0);
    CHECK(std::abs(rep.theta - rt5) <= 1e-9);
    CHECK(std::abs(rep.lambda - (3.0 - rt5)) <= 1e-9);
    CHECK(std::abs(rep.radius - std::sqrt(3.0 / 20.0)) <= 1e-9);
    CHECK(std::abs(rep.omega - rt5 / 20.0) <= 1e-9);             // theta*d/(2|E|), |E| = 30
    CHECK(std::abs(rep.length * rep.length - (3.0 - rt5) / 10.0) <= 1e-9);
    CHECK(std::abs(rep.cosine - rt5 / 3.0) <= 1e-9);
    // the relative length is the reciprocal of the unit-edge circumradius
    CHECK(std::abs(rep.relative_length - 0.7136441795) <= 1e-9);
}

TEST_CASE("metric report closed forms across the catalog") {
    struct Row {
        const char* name;
        int index1;
        double cosine;
        double rel2;   // relative_length^2 = 2 lambda / deg
    };
    double rt5 = std::sqrt(5.0);
    std::vector<Row> rows = {
        {"dodecahedron", 2, rt5 / 3.0, 2.0 * (3.0 - rt5) / 3.0},
        {"icosahedron", 2, rt5 / 5.0, 2.0 * (5.0 - rt5) / 5.0},
        {"petersen", 2, 1.0 / 3.0, 4.0 / 3.0},
        {"petersen", 3, -2.0 / 3.0, 10.0 / 3.0},
        {"complete_bipartite", 2, 0.0, 2.0},   // params {3,3}, d = 4
        {"cuboctahedron", 2, 0.5, 1.0},
        {"cell24", 2, 0.5, 1.0},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        CAPTURE(row.index1);
        Graph g = row.name == std::string("complete_bipartite")
                      ? catalog(row.name, {3, 3})
                      : catalog(row.name);
        Realization r = spectral_realization(g, row.index1);
        MetricReport rep = metric_report(r, automorphism_group(g));
        CHECK(std::abs(rep.cosine - row.cosine) <= 1e-9);
        CHECK(std::abs(rep.relative_length * rep.relative_length - row.rel2) <= 1e-9);
        // report-internal identities
        CHECK(rep.cosine >= -1.0);
        CHECK(rep.cosine <= 1.0);
        CHECK(std::abs(rep.length * rep.length -
                       2.0 * (rep.radius * rep.radius - rep.omega)) <= 1e-9);
        CHECK(std::abs(rep.length * rep.length -
                       rep.relative_length * rep.relative_length * rep.radius * rep.radius) <=
              1e-9);
        // normalized input: the absolute closed forms hold too
        int e = g.edge_count();
        CHECK(std::abs(rep.omega - rep.theta * r.d() / (2.0 * e)) <= 1e-8);
        CHECK(std::abs(rep.length * rep.length - rep.lambda * r.d() / e) <= 1e-8);
    }
}

TEST_CASE("metric report on spherical coordinate realizations") {
    // 24-cell paper coordinates: edge length equals circumradius
    Realization c24 = make_realization(catalog("cell24"), *catalog_coordinates("cell24"));
    MetricReport rep = metric_report(c24, automorphism_group(catalog("cell24")));
    CHECK(std::abs(rep.radius - std::sqrt(2.0)) <= 1e-9);
    CHECK(std::abs(rep.omega - 1.0) <= 1e-9);
    CHECK(std::abs(rep.length - std::sqrt(2.0)) <= 1e-9);
    CHECK(std::abs(rep.cosine - 0.5) <= 1e-9);
    CHECK(std::abs(rep.relative_length - 1.0) <= 1e-9);
    CHECK(std::abs(rep.theta - 4.0) <= 1e-9);
    CHECK(std::abs(rep.lambda - 4.0) <= 1e-9);

    // unit hexagon on C6: everything equals 1 except the cosine
    MetricReport hx = metric_report(hexagon(), automorphism_group(catalog("cycle", {6})));
    CHECK(std::abs(hx.radius - 1.0) <= 1e-12);
    CHECK(std::abs(hx.omega - 0.5) <= 1e-12);
    CHECK(std::abs(hx.length - 1.0) <= 1e-12);
    CHECK(std::abs(hx.cosine - 0.5) <= 1e-12);
    CHECK(std::abs(hx.relative_length - 1.0) <= 1e-12);
    CHECK(std::abs(hx.theta - 1.0) <= 1e-12);
}

TEST_CASE("metric report rejects inputs outside its hypotheses") {
    // vertex- but not edge-transitive: the hexagonal prism
    Graph prism = catalog("prism", {6});
    Eigen::MatrixXd pm(12, 2);
    double s3 = std::sqrt(3.0) / 2.0;
    pm << 1, 0, 0.5, s3, -0.5, s3, -1, 0, -0.5, -s3, 0.5, -s3,
        -1, 0, -0.5, -s3, 0.5, -s3, 1, 0, 0.5, s3, -0.5, s3;
    Realization flat = make_realization(prism, pm);
    CHECK_THROWS_AS(metric_report(flat, automorphism_group(prism)), precondition_error);

    // edge- but not vertex-transitive
    Graph star = catalog("complete_bipartite", {1, 3});
    Eigen::MatrixXd sm(4, 2);
    sm << 0, 0, 1, 0, -0.5, s3, -0.5, -s3;
    CHECK_THROWS_AS(metric_report(make_realization(star, sm), automorphism_group(star)),
                    precondition_error);

    // transitive enough but not balanced (and not even a Sigma-realization)
    Graph c4 = catalog("cycle", {4});
    Eigen::MatrixXd wonky(4, 2);
    wonky << 1, 0, 0, 1, -1, 0, 0, -2;
    CHECK_THROWS_AS(metric_report(make_realization(c4, wonky), automorphism_group(c4)),
                    precondition_error);
}

TEST_CASE("circumradius at unit edge") {
    double rt5 = std::sqrt(5.0);
    double want = std::sqrt(3.0 / (2.0 * (3.0 - rt5)));
    CHECK(std::abs(circumradius_at_unit_edge(catalog("dodecahedron"), rt5) - want) <= 1e-12);
    CHECK(std::abs(want - 1.401258) <= 1e-5);
    CHECK(std::abs(circumradius_at_unit_edge(catalog("cell24"), 4.0) - 1.0) <= 1e-12);
    CHECK(std::abs(circumradius_at_unit_edge(catalog("complete", {5}), -1.0) -
                   std::sqrt(4.0 / 10.0)) <= 1e-12);

    CHECK_THROWS_AS(circumradius_at_unit_edge(catalog("dodecahedron"), 3.0),
                    precondition_error);
    CHECK_THROWS_AS(circumradius_at_unit_edge(catalog("dodecahedron"), 3.5),
                    precondition_error);
    CHECK_THROWS_AS(circumradius_at_unit_edge(catalog("complete_bipartite", {1, 3}), 0.0),
                    precondition_error);
}

TEST_CASE("dihedral angle from the dual graph") {
    // the icosahedron dihedral angle, computed in the dodecahedron
    double got = dihedral_angle_from_dual(catalog("dodecahedron"), std::sqrt(5.0));
    CHECK(std::abs(got - 138.1896851) <= 1e-6);
    CHECK(std::abs(got - 138.1896) <= 1e-3);

    CHECK(std::abs(dihedral_angle_from_dual(catalog("cycle", {6}), 0.0) - 90.0) <= 1e-12);
    CHECK(std::abs(dihedral_angle_from_dual(catalog("cycle", {6}), 2.0) - 180.0) <= 1e-12);
    CHECK(std::abs(dihedral_angle_from_dual(catalog("cycle", {6}), -2.0) - 0.0) <= 1e-12);

    CHECK_THROWS_AS(dihedral_angle_from_dual(catalog("dodecahedron"), 4.0), precondition_error);
    CHECK_THROWS_AS(dihedral_angle_from_dual(catalog("dodecahedron"), -3.5), precondition_error);
}

TEST_CASE("theta from metric data") {
    CHECK(theta_from_metrics(8.0, 1.0) == 4.0);
    CHECK(std::abs(theta_from_metrics(7.0, std::sqrt(2.0))) <= 1e-12);
    // round trip against the printed circumradius of the unit-edge dodecahedron
    CHECK(std::abs(theta_from_metrics(3.0, 1.0 / 1.401258) - std::sqrt(5.0)) <= 1e-4);

    // algebraic round trip over a theta sweep for two degrees
    for (double deg : {3.0, 7.0})
        for (double theta = -deg; theta <= deg + 1e-9; theta += deg / 8.0) {
            double rel = std::sqrt(2.0 * (1.0 - theta / deg));
            CHECK(std::abs(theta_from_metrics(deg, rel) - theta) <= 1e-10);
        }
}

TEST_CASE("metric report agrees with theta_from_metrics") {
    for (const char* name : {"dodecahedron", "icosahedron", "cuboctahedron", "cell24"}) {
        CAPTURE(name);
        Graph g = catalog(name);
        MetricReport rep = metric_report(spectral_realization(g, 2), automorphism_group(g));
        double deg = static_cast<double>(*g.regular_degree());
        CHECK(std::abs(theta_from_metrics(deg, rep.relative_length) - rep.theta) <= 1e-9);
    }
}

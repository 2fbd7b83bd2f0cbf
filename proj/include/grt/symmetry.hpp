#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "grt/graph.hpp"

namespace grt {

// Permutation of {0..n-1} in image form: img[i] = where i goes.
struct Perm {
    std::vector<int> img;

    static Perm identity(int n);
    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
    bool is_identity() const;
    Perm inverse() const;
    // (a * b)(i) = a(b(i))
    friend Perm operator*(const Perm& a, const Perm& b);
    auto operator<=>(const Perm&) const = default;
};

inline constexpr std::uint64_t kGroupCap = 1'000'000;

// Permutation group given by generators. `order` is always exact (computed
// from a stabilizer chain during construction; saturates at UINT64_MAX for
// orders beyond 64 bits); `elements` is filled only on demand and only when
// order <= kGroupCap.
struct PermGroup {
    int n = 0;
    std::vector<Perm> generators;
    std::uint64_t order = 1;
    mutable std::optional<std::vector<Perm>> elements;   // lazily filled cache

    // full enumeration via closure of the generators; throws precondition_error
    // beyond the cap. Elements come back sorted lexicographically.
    const std::vector<Perm>& enumerate(std::uint64_t cap = kGroupCap) const;
};

PermGroup trivial_group(int n);
// group generated by the given permutations (order via stabilizer chain)
PermGroup group_from_generators(int n, std::vector<Perm> gens);

// Automorphism group by backtracking over an equitable-partition refinement,
// with orbit pruning at each level of the stabilizer chain. Deterministic
// generator set. n <= 500.
PermGroup automorphism_group(const Graph& g);

// Stabilizer of vertex i (exact order, generator set).
PermGroup stabilizer(const PermGroup& group, int i);

// orbit of a single vertex under the generators
std::vector<int> vertex_orbit(const PermGroup& group, int start);

// Orbit partitions of the induced actions. Each orbit is sorted; orbits are
// sorted by smallest element.
std::vector<std::vector<int>> orbits_vertices(const PermGroup& group);
std::vector<std::vector<std::pair<int, int>>> orbits_edges(const PermGroup& group, const Graph& g);
// arcs = ordered adjacent pairs (i,j)
std::vector<std::vector<std::pair<int, int>>> orbits_arcs(const PermGroup& group, const Graph& g);
// ordered pairs (i,j) with dist(i,j) = delta, 0 <= delta <= diam; requires a
// connected graph (throws precondition_error otherwise, or when delta > diam)
std::vector<std::vector<std::pair<int, int>>> orbits_distance_pairs(const PermGroup& group,
                                                                    const Graph& g, int delta);

struct TransitivityFlags {
    bool vertex = false;
    bool edge = false;
    bool arc = false;
    bool distance = false;
};

// The distance flag means: every set of ordered pairs at distance delta,
// delta = 0..diam, is a single orbit. It is reported false for disconnected
// graphs; the other flags do not need connectivity.
TransitivityFlags transitivity_class(const Graph& g, const PermGroup& group);

// Orbits of the group on singletons {i} and unordered pairs {i,j}. Class ids
// are consecutive, diagonal classes first, then pair classes, each numbered by
// their smallest member in (i, then j) order.
struct OrbitalPartition {
    int n = 0;
    int num_classes = 0;
    std::vector<int> diag_class;   // class of {i}
    Eigen::MatrixXi pair_class;    // class of {i,j} for i != j; symmetric
};

OrbitalPartition orbitals(const PermGroup& group);

// A^O with entry (i,j) = weight of class {i,j}; commutes with every group
// element exactly (entries constant on orbits).
Eigen::MatrixXd orbital_matrix(const OrbitalPartition& op,
                               const std::map<int, double>& weights);
// weights drawn i.i.d. uniform [0,1) from splitmix64(seed), in class-id order
Eigen::MatrixXd orbital_matrix(const OrbitalPartition& op, std::uint64_t seed);

// permutation matrix P with P x = x permuted by sigma: P(sigma(i), i) = 1
Eigen::MatrixXd permutation_matrix(const Perm& sigma);

} // namespace grt

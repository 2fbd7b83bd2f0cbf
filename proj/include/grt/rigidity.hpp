#pragma once
#include <optional>
#include <string>
#include <vector>

#include "grt/realization.hpp"

namespace grt {

// true iff the edge directions {v_j - v_i : j in N(i)} span R^d at every
// vertex (numerical rank, relative singular-value threshold 1e-8)
bool full_local_dimension(const Realization& r);

// dim of the common fixed space of the stabilizer's maps T_sigma at `base`;
// dim 1 certifies rigidity for vertex-transitive realizations (one-way only:
// free actions give Fix = R^d on rigid polygons)
int fix_dimension(const Realization& r, const PermGroup& group, int base);

struct EigenspaceHit {
    double theta = 0;
    double norm = 0;      // Frobenius norm of the projection of a U-basis
    bool nonzero = false; // norm > 1e-6 * sqrt(d)
};

// projection norms of the arrangement space onto each eigenspace; the squared
// norms sum to d. Two or more nonzero hits mean the realization is not
// balanced (and an irreducible one can be deformed into balanced targets).
std::vector<EigenspaceHit> eigenspace_projections(const Realization& r, const Spectrum& s);

struct MultiplicityCriteria {
    bool balanced_forced = false;  // unique largest multiplicity and mu2 < d
    bool rigid_forced = false;     // additionally mu1 < 2d
};

// applies to irreducible Sigma-realizations of dimension d
MultiplicityCriteria multiplicity_criteria(const Spectrum& s, int d);

enum class RigidityVerdict { rigid_certified, flexible_certified, inconclusive };

struct RigidityReport {
    RigidityVerdict verdict = RigidityVerdict::inconclusive;
    std::string rule;              // name of the rule that fired, "" if none
    bool full_local_dimension = false;
    std::optional<int> fix_dim;    // unset when the stabilizer was unavailable
    std::vector<EigenspaceHit> eigenspace_hits;
    bool irreducible = false;
    std::optional<double> balanced_theta;
    MultiplicityCriteria criteria; // from the graph spectrum and d
    std::string evidence;          // human-readable numeric evidence
};

// Rule cascade over a Sigma-realization (extract_representation must succeed):
//   (a) group distance-transitive            -> rigid_certified
//   (b) arc-transitive + full local dim      -> rigid_certified
//       (irreducibility and balancedness re-verified, not assumed)
//   (c) vertex-transitive + Fix dim = 1      -> rigid_certified
//   (d) irreducible, not vertex-transitive, >= 2 nonzero vertex orbits
//                                            -> flexible_certified
//   (e) irreducible + >= 2 eigenspace hits   -> flexible_certified
//   otherwise inconclusive (a first-class outcome; some questions are open)
RigidityReport rigidity_report(const Realization& r, const PermGroup& group,
                               std::uint64_t seed = 0);

} // namespace grt

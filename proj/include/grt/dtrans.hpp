#pragma once
#include <optional>
#include <set>
#include <vector>

#include "grt/realization.hpp"

namespace grt {

// Intersection numbers of a distance-regular graph: for vertices i,j at
// distance delta, c = neighbors of j at distance delta-1 from i, a = at delta,
// b = at delta+1. Constancy over all pairs is what distance-regularity means.
struct IntersectionArray {
    int diam = 0;
    int deg = 0;
    std::vector<int> c;    // c_1..c_diam
    std::vector<int> a;    // a_0..a_diam
    std::vector<int> b;    // b_0..b_{diam-1}
};

struct IntersectionArrayResult {
    std::optional<IntersectionArray> array;
    // set when not distance-regular: the pair and shell where constancy broke
    std::pair<int, int> violating_pair{-1, -1};
    std::string reason;
    bool ok() const { return array.has_value(); }
};

// requires connected input; anything not distance-regular — irregular graphs
// included, since b_0 is the degree — comes back as a soft failure carrying
// the first violating pair in row-major scan order
IntersectionArrayResult intersection_array(const Graph& g);

// u_0 = 1, u_1 = theta/deg, u_{delta+1} = ((theta - a_delta) u_delta
//   - c_delta u_{delta-1}) / b_delta  — the radius-1 normalization
std::vector<double> cosine_sequence_recurrence(const IntersectionArray& arr, double theta);

// u_j = <v_base, v_j>; the distance-grouped sequence is attached only when the
// entries are distance-constant within 1e-8
struct CosineProfile {
    Eigen::VectorXd vector;
    int base_vertex = 0;
    double radius_sq = 0;                     // u_base
    std::optional<std::vector<double>> sequence;  // u_0..u_diam when grouping is exact
};

CosineProfile cosine_profile(const Realization& r, int base = 0);

// Feasibility of a competing cosine vector ub under
//   <u, ub> = 0;  sum(ub) = 0 (optional);  ub_i = u_i on fixed positions;
//   ub_i in [-r^2, r^2] elsewhere.
// Decided exactly (rational arithmetic) when all entries are within 1e-9 of
// rationals with denominator <= 64, else in floating point at 1e-9. The
// achievable (sum, inner-product) pairs over the box form a zonotope; the test
// is point-in-polygon. Infeasible certifies that no second orthogonal
// realization with the same fixed entries exists.
struct ObstructionResult {
    bool feasible = false;
    bool exact = false;              // rational path taken
    // achievable range of <u, ub> over the box (intersected with sum(ub) = 0
    // when that constraint is on): feasible iff it contains 0. Reported with
    // inner_min > inner_max when the sum constraint alone is unsatisfiable.
    double inner_min = 0;
    double inner_max = 0;
};

ObstructionResult cosine_obstruction(const CosineProfile& profile,
                                     const std::set<int>& fixed_positions,
                                     bool sum_zero);

} // namespace grt

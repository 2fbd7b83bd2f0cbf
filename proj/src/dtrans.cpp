#include "grt/dtrans.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace grt {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw precondition_error(msg);
}

// ---- exact rational arithmetic for the obstruction solver ----------------
//
// Profile entries are screened to be within 1e-9 of p/q with q <= 64, so the
// slice computation stays tiny; the overflow guard exists for inputs far
// outside that regime and bounces the caller onto the floating-point path.

__int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Rat {
    long long p = 0;
    long long q = 1;
};

Rat make_rat(__int128 p, __int128 q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    __int128 g = gcd128(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    const __int128 lim = static_cast<__int128>(1) << 62;
    if (p >= lim || p <= -lim || q >= lim)
        throw std::overflow_error("rational arithmetic overflow");
    return Rat{static_cast<long long>(p), static_cast<long long>(q)};
}

Rat add(Rat x, Rat y) {
    return make_rat(static_cast<__int128>(x.p) * y.q + static_cast<__int128>(y.p) * x.q,
                    static_cast<__int128>(x.q) * y.q);
}
Rat sub(Rat x, Rat y) {
    return make_rat(static_cast<__int128>(x.p) * y.q - static_cast<__int128>(y.p) * x.q,
                    static_cast<__int128>(x.q) * y.q);
}
Rat mul(Rat x, Rat y) {
    return make_rat(static_cast<__int128>(x.p) * y.p, static_cast<__int128>(x.q) * y.q);
}
bool less(Rat x, Rat y) {
    return static_cast<__int128>(x.p) * y.q < static_cast<__int128>(y.p) * x.q;
}
bool leq(Rat x, Rat y) {
    return static_cast<__int128>(x.p) * y.q <= static_cast<__int128>(y.p) * x.q;
}
double to_double(Rat x) { return static_cast<double>(x.p) / static_cast<double>(x.q); }

double add(double x, double y) { return x + y; }
double sub(double x, double y) { return x - y; }
double mul(double x, double y) { return x * y; }
bool less(double x, double y) { return x < y; }
bool leq(double x, double y) { return x <= y; }
double to_double(double x) { return x; }

// nearest p/q with q <= 64, if one sits within 1e-9
std::optional<Rat> rationalize(double x) {
    if (std::abs(x) > 1e15) return std::nullopt;
    for (long long q = 1; q <= 64; ++q) {
        long long p = std::llround(x * static_cast<double>(q));
        if (std::abs(x - static_cast<double>(p) / static_cast<double>(q)) <= 1e-9)
            return make_rat(p, q);
    }
    return std::nullopt;
}

// ---- continuous knapsack over box * {sum = 0} ----------------------------

template <class F>
struct Slot {
    F low;
    F high;
    F weight;
};

// extreme of sum(weight_i x_i) with every x_i started at low_i and `budget`
// mass to distribute: cheapest slots first minimizes, dearest first maximizes
template <class F>
F extreme_inner(const std::vector<Slot<F>>& slots, F budget, bool minimize, F zero) {
    std::vector<int> order(slots.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return minimize ? less(slots[i].weight, slots[j].weight)
                        : less(slots[j].weight, slots[i].weight);
    });
    F inner = zero;
    for (const Slot<F>& s : slots) inner = add(inner, mul(s.weight, s.low));
    F remaining = budget;
    for (int i : order) {
        if (leq(remaining, zero)) break;
        F cap = sub(slots[i].high, slots[i].low);
        F take = less(cap, remaining) ? cap : remaining;
        inner = add(inner, mul(slots[i].weight, take));
        remaining = sub(remaining, take);
    }
    return inner;
}

// achievable range of the inner product over the box, sliced at sum = 0 when
// requested; comparisons get `tol` slack (zero on the exact path)
template <class F>
void solve_obstruction(const std::vector<Slot<F>>& slots, bool sum_zero, F zero, F tol,
                       ObstructionResult& out) {
    if (sum_zero) {
        F sum_lo = zero, sum_hi = zero;
        for (const Slot<F>& s : slots) {
            sum_lo = add(sum_lo, s.low);
            sum_hi = add(sum_hi, s.high);
        }
        if (!(leq(sub(sum_lo, tol), zero) && leq(zero, add(sum_hi, tol)))) {
            out.feasible = false;
            out.inner_min = 0;
            out.inner_max = -1;   // empty slice: the sum constraint alone fails
            return;
        }
        F budget = sub(zero, sum_lo);
        if (less(budget, zero)) budget = zero;
        F lo = extreme_inner(slots, budget, true, zero);
        F hi = extreme_inner(slots, budget, false, zero);
        out.inner_min = to_double(lo);
        out.inner_max = to_double(hi);
        out.feasible = leq(sub(lo, tol), zero) && leq(zero, add(hi, tol));
    } else {
        F lo = zero, hi = zero;
        for (const Slot<F>& s : slots) {
            F a = mul(s.weight, s.low);
            F b = mul(s.weight, s.high);
            lo = add(lo, less(a, b) ? a : b);
            hi = add(hi, less(a, b) ? b : a);
        }
        out.inner_min = to_double(lo);
        out.inner_max = to_double(hi);
        out.feasible = leq(sub(lo, tol), zero) && leq(zero, add(hi, tol));
    }
}

} // namespace

IntersectionArrayResult intersection_array(const Graph& g) {
    require(g.n() >= 1, "intersection array needs a nonempty graph");
    DistanceTable dt = distances(g);
    require(dt.connected, "intersection array needs a connected graph");

    const int n = g.n();
    IntersectionArrayResult out;
    // seen[delta] = (c, a, b) from the first pair at that distance
    std::vector<std::array<int, 3>> seen(dt.diam + 1, {-1, -1, -1});
    std::vector<std::pair<int, int>> origin(dt.diam + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int delta = dt.dist(i, j);
            std::array<int, 3> counts{0, 0, 0};
            for (int k : g.neighbors(j)) {
                int dk = dt.dist(i, k);
                if (dk == delta - 1)
                    ++counts[0];
                else if (dk == delta)
                    ++counts[1];
                else
                    ++counts[2];   // adjacency moves distance by at most one
            }
            if (seen[delta][0] < 0) {
                seen[delta] = counts;
                origin[delta] = {i, j};
                continue;
            }
            for (int t = 0; t < 3; ++t) {
                if (seen[delta][t] == counts[t]) continue;
                out.violating_pair = {i, j};
                std::ostringstream msg;
                msg << "cab"[t] << "_" << delta << " = " << counts[t] << " at pair ("
                    << i << "," << j << ") disagrees with " << seen[delta][t]
                    << " at pair (" << origin[delta].first << "," << origin[delta].second
                    << ")";
                out.reason = msg.str();
                return out;
            }
        }
    }

    IntersectionArray arr;
    arr.diam = dt.diam;
    arr.deg = seen[0][2];   // b_0 is the common degree
    for (int d = 1; d <= dt.diam; ++d) arr.c.push_back(seen[d][0]);
    for (int d = 0; d <= dt.diam; ++d) arr.a.push_back(seen[d][1]);
    for (int d = 0; d < dt.diam; ++d) arr.b.push_back(seen[d][2]);
    out.array = std::move(arr);
    return out;
}

std::vector<double> cosine_sequence_recurrence(const IntersectionArray& arr, double theta) {
    require(arr.diam >= 1, "cosine sequence needs diameter at least 1");
    require(arr.deg >= 1, "cosine sequence needs positive degree");
    require(static_cast<int>(arr.c.size()) == arr.diam &&
                static_cast<int>(arr.a.size()) == arr.diam + 1 &&
                static_cast<int>(arr.b.size()) == arr.diam,
            "intersection array has inconsistent shape");

    std::vector<double> u = {1.0, theta / arr.deg};
    for (int delta = 1; delta < arr.diam; ++delta) {
        require(arr.b[delta] > 0, "cosine recurrence needs positive b entries");
        u.push_back(((theta - arr.a[delta]) * u[delta] - arr.c[delta - 1] * u[delta - 1]) /
                    arr.b[delta]);
    }
    return u;
}

CosineProfile cosine_profile(const Realization& r, int base) {
    require(base >= 0 && base < r.n(), "base vertex out of range");
    CosineProfile out;
    out.base_vertex = base;
    out.vector = r.m * r.m.row(base).transpose();
    out.radius_sq = out.vector(base);

    DistanceTable dt = distances(r.graph);
    if (!dt.connected) return out;
    int ecc = 0;
    for (int j = 0; j < r.n(); ++j) ecc = std::max(ecc, dt.dist(base, j));
    std::vector<double> lo(ecc + 1, std::numeric_limits<double>::infinity());
    std::vector<double> hi(ecc + 1, -std::numeric_limits<double>::infinity());
    std::vector<double> sum(ecc + 1, 0.0);
    std::vector<int> count(ecc + 1, 0);
    for (int j = 0; j < r.n(); ++j) {
        int d = dt.dist(base, j);
        double u = out.vector(j);
        lo[d] = std::min(lo[d], u);
        hi[d] = std::max(hi[d], u);
        sum[d] += u;
        ++count[d];
    }
    for (int d = 0; d <= ecc; ++d)
        if (hi[d] - lo[d] > 1e-8) return out;   // not distance-constant
    std::vector<double> seq;
    for (int d = 0; d <= ecc; ++d) seq.push_back(sum[d] / count[d]);
    out.sequence = std::move(seq);
    return out;
}

ObstructionResult cosine_obstruction(const CosineProfile& profile,
                                     const std::set<int>& fixed_positions,
                                     bool sum_zero) {
    const int n = static_cast<int>(profile.vector.size());
    const double r2 = profile.radius_sq;
    for (int i : fixed_positions) {
        require(i >= 0 && i < n, "fixed position out of range");
        require(std::abs(profile.vector(i)) <= r2 + 1e-9,
                "fixed cosine entry exceeds the squared radius");
    }

    ObstructionResult out;

    // exact path: every entry and the radius admit a small-denominator form
    bool exact = true;
    std::vector<Rat> entries(n);
    Rat rr2;
    if (auto q = rationalize(r2))
        rr2 = *q;
    else
        exact = false;
    for (int i = 0; exact && i < n; ++i) {
        if (auto q = rationalize(profile.vector(i)))
            entries[i] = *q;
        else
            exact = false;
    }
    if (exact) {
        try {
            std::vector<Slot<Rat>> slots(n);
            for (int i = 0; i < n; ++i) {
                if (fixed_positions.count(i))
                    slots[i] = {entries[i], entries[i], entries[i]};
                else
                    slots[i] = {sub(Rat{0, 1}, rr2), rr2, entries[i]};
            }
            solve_obstruction(slots, sum_zero, Rat{0, 1}, Rat{0, 1}, out);
            out.exact = true;
            return out;
        } catch (const std::overflow_error&) {
            // fall through to floating point
        }
    }

    std::vector<Slot<double>> slots(n);
    for (int i = 0; i < n; ++i) {
        double u = profile.vector(i);
        if (fixed_positions.count(i))
            slots[i] = {u, u, u};
        else
            slots[i] = {-r2, r2, u};
    }
    solve_obstruction(slots, sum_zero, 0.0, 1e-9, out);
    out.exact = false;
    return out;
}

} // namespace grt

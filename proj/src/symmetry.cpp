#include "grt/symmetry.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grt/prng.hpp"

namespace grt {

namespace {

int first_moved(const Perm& p) {
    for (int i = 0; i < p.n(); ++i)
        if (p(i) != i) return i;
    return p.n();
}

// Stabilizer chain with base 0, 1, ..., n-1: level k holds the generators
// fixing 0..k-1 pointwise and a Schreier tree of the orbit of k under them.
// Built to a fixpoint where every Schreier generator sifts to the identity,
// which makes the orbit-size product the exact group order.
class Chain {
public:
    Chain(int n, std::vector<Perm> gens) : n_(n), gens_(std::move(gens)) {
        levels_.resize(n_);
        for (Perm& g : gens_) level_of_.push_back(first_moved(g));
        close();
    }

    std::uint64_t order() const {
        unsigned __int128 acc = 1;
        for (int k = 0; k < n_; ++k) {
            acc *= static_cast<unsigned>(levels_[k].orbit.size());
            if (acc > std::numeric_limits<std::uint64_t>::max())
                return std::numeric_limits<std::uint64_t>::max();
        }
        return static_cast<std::uint64_t>(acc);
    }

private:
    struct Level {
        std::vector<int> orbit;    // BFS discovery order, starts with the base point
        std::vector<int> parent;   // previous orbit point, -1 at the root / outside
        std::vector<int> via;      // generator index applied at the last step
    };

    void rebuild(int k) {
        Level& lv = levels_[k];
        lv.parent.assign(n_, -2);
        lv.via.assign(n_, -1);
        lv.orbit = {k};
        lv.parent[k] = -1;
        for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
            int p = lv.orbit[qi];
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                if (level_of_[gi] < k) continue;
                int q = gens_[gi](p);
                if (lv.parent[q] == -2) {
                    lv.parent[q] = p;
                    lv.via[q] = static_cast<int>(gi);
                    lv.orbit.push_back(q);
                }
            }
        }
    }

    // Element of the group mapping the base point k to the orbit point p:
    // walking the Schreier tree root-ward visits the step generators in
    // last-applied-first order, which matches left-multiplication.
    Perm transversal(int k, int p) const {
        const Level& lv = levels_[k];
        Perm out = Perm::identity(n_);
        while (lv.parent[p] >= 0) {
            out = out * gens_[lv.via[p]];
            p = lv.parent[p];
        }
        return out;
    }

    // divide off transversal factors level by level; returns the residue
    Perm sift(Perm g, int from_level) const {
        for (int k = from_level; k < n_; ++k) {
            int img = g(k);
            if (img == k) continue;
            if (levels_[k].parent[img] == -2) return g;  // not in the orbit: new info
            g = transversal(k, img).inverse() * g;
        }
        return g;
    }

    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int k = 0; k < n_; ++k) rebuild(k);
            for (int k = 0; k < n_; ++k) {
                const Level& lv = levels_[k];
                for (int p : lv.orbit) {
                    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                        if (level_of_[gi] < k) continue;
                        const Perm& s = gens_[gi];
                        Perm schreier = transversal(k, s(p)).inverse() * s * transversal(k, p);
                        Perm residue = sift(std::move(schreier), k + 1);
                        if (!residue.is_identity() &&
                            std::find(gens_.begin(), gens_.end(), residue) == gens_.end()) {
                            level_of_.push_back(first_moved(residue));
                            gens_.push_back(std::move(residue));
                            changed = true;
                        }
                    }
                }
                if (changed) break;  // orbits are stale; restart from a rebuild
            }
        }
    }

    int n_;
    std::vector<Perm> gens_;
    std::vector<int> level_of_;
    std::vector<Level> levels_;
};

void validate_perm(int n, const Perm& p) {
    if (p.n() != n) throw precondition_error("permutation degree mismatch");
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
        int v = p(i);
        if (v < 0 || v >= n || hit[v]) throw precondition_error("not a permutation");
        hit[v] = true;
    }
}

// union-find with path compression; roots are the smallest members
struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int m) : up(m) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        up[b] = a;
    }
};

// orbits of an arbitrary item action, presented canonically: each orbit in
// item order, orbits ordered by their first item
template <typename Item, typename Act>
std::vector<std::vector<Item>> item_orbits(const std::vector<Item>& items,
                                           const std::vector<Perm>& gens, Act act) {
    std::map<Item, int> index;
    for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(items.size()));
    for (const Perm& s : gens)
        for (std::size_t i = 0; i < items.size(); ++i) uf.unite(static_cast<int>(i), index.at(act(s, items[i])));
    std::map<int, std::vector<Item>> buckets;
    for (std::size_t i = 0; i < items.size(); ++i) buckets[uf.find(static_cast<int>(i))].push_back(items[i]);
    std::vector<std::vector<Item>> out;
    for (auto& [root, members] : buckets) out.push_back(std::move(members));
    return out;
}

// 1-dimensional Weisfeiler-Leman colors: refine by multisets of neighbor
// colors until the partition stops splitting. Color ids are canonical
// (assigned by sorted signature order), so equal inputs give equal colorings.
std::vector<int> stable_coloring(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, 0);
    {
        std::vector<int> degs;
        for (int v = 0; v < n; ++v) degs.push_back(static_cast<int>(g.neighbors(v).size()));
        std::vector<int> uniq = degs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), degs[v]) -
                                        uniq.begin());
    }
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            for (int w : g.neighbors(v)) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> uniq;
        for (const auto& [s, v] : sig) uniq.push_back(s);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (const auto& [s, v] : sig)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), s) -
                                        uniq.begin());
        if (uniq.size() == classes) break;
        classes = uniq.size();
    }
    return color;
}

// Depth-first search for one automorphism extending the partial map
// {0..k-1 -> identity, k -> t}; vertices are assigned in index order and
// candidates must match the stable coloring and all adjacencies decided so
// far. Returns the first permutation found, so the result is deterministic.
bool search_extend(const Graph& g, const std::vector<int>& color, int k, int t, Perm* out) {
    int n = g.n();
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    for (int i = 0; i < k; ++i) {
        img[i] = i;
        used[i] = true;
    }
    if (color[k] != color[t]) return false;
    for (int j = 0; j < k; ++j)
        if (g.adjacent(k, j) != g.adjacent(t, j)) return false;
    img[k] = t;
    used[t] = true;

    std::vector<int> cand(n, -1);  // last candidate tried per position
    int pos = k + 1;
    while (pos > k) {
        if (pos == n) {
            out->img = img;
            return true;
        }
        bool advanced = false;
        for (int c = cand[pos] + 1; c < n; ++c) {
            if (used[c] || color[c] != color[pos]) continue;
            bool ok = true;
            for (int j = 0; j < pos && ok; ++j) ok = g.adjacent(pos, j) == g.adjacent(c, img[j]);
            if (!ok) continue;
            cand[pos] = c;
            img[pos] = c;
            used[c] = true;
            ++pos;
            advanced = true;
            break;
        }
        if (advanced) continue;
        cand[pos] = -1;
        --pos;
        if (pos > k) {
            used[img[pos]] = false;
            img[pos] = -1;
        }
    }
    return false;
}

} // namespace

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm out;
    out.img.resize(n());
    for (int i = 0; i < n(); ++i) out.img[img[i]] = i;
    return out;
}

Perm operator*(const Perm& a, const Perm& b) {
    Perm out;
    out.img.resize(a.n());
    for (int i = 0; i < a.n(); ++i) out.img[i] = a(b(i));
    return out;
}

Eigen::MatrixXd permutation_matrix(const Perm& sigma) {
    int n = sigma.n();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) p(sigma(i), i) = 1.0;
    return p;
}

const std::vector<Perm>& PermGroup::enumerate(std::uint64_t cap) const {
    if (order > cap) throw precondition_error("group order exceeds the enumeration cap");
    if (elements && elements->size() == order) return *elements;
    std::set<Perm> seen;
    std::vector<Perm> queue{Perm::identity(n)};
    seen.insert(queue[0]);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Perm cur = queue[qi];
        for (const Perm& s : generators) {
            Perm next = s * cur;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    elements = std::vector<Perm>(seen.begin(), seen.end());  // lexicographic order
    return *elements;
}

PermGroup trivial_group(int n) {
    PermGroup g;
    g.n = n;
    g.order = 1;
    return g;
}

PermGroup group_from_generators(int n, std::vector<Perm> gens) {
    for (const Perm& p : gens) validate_perm(n, p);
    std::vector<Perm> kept;
    for (Perm& p : gens)
        if (!p.is_identity() && std::find(kept.begin(), kept.end(), p) == kept.end())
            kept.push_back(std::move(p));
    PermGroup out;
    out.n = n;
    out.order = Chain(n, kept).order();
    out.generators = std::move(kept);
    return out;
}

PermGroup automorphism_group(const Graph& g) {
    int n = g.n();
    if (n > 500) throw precondition_error("automorphism search supports at most 500 vertices");
    std::vector<int> color = stable_coloring(g);
    std::vector<Perm> found;

    // Work up the stabilizer chain from the deepest level: at level k we
    // already hold generators for everything fixing 0..k, so one new
    // automorphism per fresh orbit point of k is enough to generate the
    // level-k stabilizer.
    for (int k = n - 1; k >= 0; --k) {
        std::vector<bool> in_orbit(n, false);
        in_orbit[k] = true;
        std::vector<int> frontier{k};
        auto close_orbit = [&]() {
            for (std::size_t qi = 0; qi < frontier.size(); ++qi)
                for (const Perm& s : found) {
                    if (first_moved(s) < k) continue;
                    int q = s(frontier[qi]);
                    if (!in_orbit[q]) {
                        in_orbit[q] = true;
                        frontier.push_back(q);
                    }
                }
        };
        close_orbit();
        for (int t = k + 1; t < n; ++t) {
            if (in_orbit[t] || color[t] != color[k]) continue;
            Perm p;
            if (search_extend(g, color, k, t, &p)) {
                found.push_back(std::move(p));
                close_orbit();
            }
        }
    }
    return group_from_generators(n, std::move(found));
}

PermGroup stabilizer(const PermGroup& group, int i) {
    if (i < 0 || i >= group.n) throw precondition_error("stabilizer vertex out of range");
    // Schreier's lemma: transversal-conjugated generators generate the stabilizer
    std::vector<int> orbit{i};
    std::map<int, Perm> to_point{{i, Perm::identity(group.n)}};
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
        int p = orbit[qi];
        for (const Perm& s : group.generators) {
            int q = s(p);
            if (!to_point.count(q)) {
                to_point.emplace(q, s * to_point.at(p));
                orbit.push_back(q);
            }
        }
    }
    std::vector<Perm> schreier;
    for (int p : orbit)
        for (const Perm& s : group.generators) {
            Perm u = to_point.at(s(p)).inverse() * s * to_point.at(p);
            if (!u.is_identity() && std::find(schreier.begin(), schreier.end(), u) == schreier.end())
                schreier.push_back(std::move(u));
        }
    return group_from_generators(group.n, std::move(schreier));
}

std::vector<int> vertex_orbit(const PermGroup& group, int start) {
    if (start < 0 || start >= group.n) throw precondition_error("vertex out of range");
    std::vector<bool> seen(group.n, false);
    seen[start] = true;
    std::vector<int> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const Perm& s : group.generators) {
            int q = s(queue[qi]);
            if (!seen[q]) {
                seen[q] = true;
                queue.push_back(q);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<std::vector<int>> orbits_vertices(const PermGroup& group) {
    std::vector<int> items(group.n);
    std::iota(items.begin(), items.end(), 0);
    return item_orbits(items, group.generators, [](const Perm& s, int v) { return s(v); });
}

std::vector<std::vector<std::pair<int, int>>> orbits_edges(const PermGroup& group, const Graph& g) {
    return item_orbits(g.edges(), group.generators, [](const Perm& s, std::pair<int, int> e) {
        return std::minmax({s(e.first), s(e.second)});
    });
}

std::vector<std::vector<std::pair<int, int>>> orbits_arcs(const PermGroup& group, const Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [i, j] : g.edges()) {
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
    }
    std::sort(arcs.begin(), arcs.end());
    return item_orbits(arcs, group.generators, [](const Perm& s, std::pair<int, int> a) {
        return std::pair<int, int>{s(a.first), s(a.second)};
    });
}

std::vector<std::vector<std::pair<int, int>>> orbits_distance_pairs(const PermGroup& group,
                                                                    const Graph& g, int delta) {
    DistanceTable dt = distances(g);
    if (!dt.connected) throw precondition_error("distance pairs need a connected graph");
    if (delta < 0 || delta > dt.diam) throw precondition_error("distance exceeds the diameter");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (dt.dist(i, j) == delta) pairs.emplace_back(i, j);
    return item_orbits(pairs, group.generators, [](const Perm& s, std::pair<int, int> a) {
        return std::pair<int, int>{s(a.first), s(a.second)};
    });
}

TransitivityFlags transitivity_class(const Graph& g, const PermGroup& group) {
    TransitivityFlags f;
    f.vertex = orbits_vertices(group).size() == 1;
    f.edge = orbits_edges(group, g).size() == 1;
    f.arc = orbits_arcs(group, g).size() == 1;
    DistanceTable dt = distances(g);
    if (dt.connected) {
        f.distance = true;
        for (int delta = 0; delta <= dt.diam && f.distance; ++delta)
            f.distance = orbits_distance_pairs(group, g, delta).size() == 1;
    }
    return f;
}

OrbitalPartition orbitals(const PermGroup& group) {
    int n = group.n;
    auto pair_index = [n](int i, int j) {  // i < j
        return n + i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    int items = n + n * (n - 1) / 2;
    UnionFind uf(items);
    for (const Perm& s : group.generators) {
        for (int i = 0; i < n; ++i) uf.unite(i, s(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto [a, b] = std::minmax({s(i), s(j)});
                uf.unite(pair_index(i, j), pair_index(a, b));
            }
    }
    OrbitalPartition op;
    op.n = n;
    op.diag_class.resize(n);
    op.pair_class = Eigen::MatrixXi::Zero(n, n);
    std::map<int, int> id;  // union-find root -> class id, in first-occurrence order
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = id.emplace(uf.find(i), static_cast<int>(id.size()));
        op.diag_class[i] = it->second;
        op.pair_class(i, i) = it->second;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto [it, fresh] = id.emplace(uf.find(pair_index(i, j)), static_cast<int>(id.size()));
            op.pair_class(i, j) = op.pair_class(j, i) = it->second;
        }
    op.num_classes = static_cast<int>(id.size());
    return op;
}

Eigen::MatrixXd orbital_matrix(const OrbitalPartition& op, const std::map<int, double>& weights) {
    for (int c = 0; c < op.num_classes; ++c)
        if (!weights.count(c)) throw precondition_error("missing weight for an orbital class");
    Eigen::MatrixXd m(op.n, op.n);
    for (int i = 0; i < op.n; ++i)
        for (int j = 0; j < op.n; ++j) m(i, j) = weights.at(op.pair_class(i, j));
    return m;
}

Eigen::MatrixXd orbital_matrix(const OrbitalPartition& op, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::map<int, double> weights;
    for (int c = 0; c < op.num_classes; ++c) weights[c] = rng.uniform01();
    return orbital_matrix(op, weights);
}

} // namespace grt

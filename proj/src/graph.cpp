#include "grt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace grt {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    edges_.reserve(edge_list.size());
    for (auto [i, j] : edge_list) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw precondition_error("edge endpoint out of range");
        if (i == j) throw precondition_error("loops are not allowed");
        edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n, {});
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int i, int j) const {
    const auto& row = adj_[i];
    return std::binary_search(row.begin(), row.end(), j);
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    int d = degree(0);
    for (int i = 1; i < n_; ++i)
        if (degree(i) != d) return std::nullopt;
    return d;
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [i, j] : edges_) {
        a(i, j) = 1;
        a(j, i) = 1;
    }
    return a;
}

DistanceTable distances(const Graph& g) {
    int n = g.n();
    DistanceTable t;
    t.dist = Eigen::MatrixXi::Constant(n, n, -1);
    t.diam = 0;
    t.connected = true;
    for (int s = 0; s < n; ++s) {
        t.dist(s, s) = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (t.dist(s, w) < 0) {
                    t.dist(s, w) = t.dist(s, v) + 1;
                    t.diam = std::max(t.diam, t.dist(s, w));
                    q.push(w);
                }
        }
        for (int j = 0; j < n; ++j)
            if (t.dist(s, j) < 0) t.connected = false;
    }
    return t;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.n() == 0 || h.n() == 0)
        throw precondition_error("cartesian product needs nonempty factors");
    int hn = h.n();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.n(); ++a)
        for (auto [b, bp] : h.edges()) edges.emplace_back(a * hn + b, a * hn + bp);
    for (auto [a, ap] : g.edges())
        for (int b = 0; b < hn; ++b) edges.emplace_back(a * hn + b, ap * hn + b);
    return Graph(g.n() * hn, std::move(edges));
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

// connect the pairs at minimal positive squared distance
Graph graph_from_coordinates(const Eigen::MatrixXd& v) {
    int n = static_cast<int>(v.rows());
    double min_sq = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = (v.row(i) - v.row(j)).squaredNorm();
            if (d > 1e-12) min_sq = std::min(min_sq, d);
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs((v.row(i) - v.row(j)).squaredNorm() - min_sq) <= 1e-9)
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

// rows (0,±a,±b)-style: all four sign choices of the two nonzero entries, in
// the order (+,+), (+,-), (-,+), (-,-)
void push_signed(std::vector<Eigen::RowVector3d>& out, double x, double y, double z) {
    // sign pattern applies to the nonzero slots in order of appearance
    for (int s = 0; s < 4; ++s) {
        double f1 = (s & 1) ? -1 : 1;   // second listed nonzero coordinate
        double f2 = (s & 2) ? -1 : 1;   // first listed nonzero coordinate
        Eigen::RowVector3d r(x, y, z);
        int seen = 0;
        for (int k = 0; k < 3; ++k) {
            if (r[k] == 0) continue;
            r[k] *= (seen == 0) ? f2 : f1;
            ++seen;
        }
        out.push_back(r);
    }
}

Eigen::MatrixXd rows_to_matrix(const std::vector<Eigen::RowVector3d>& rows) {
    Eigen::MatrixXd m(static_cast<int>(rows.size()), 3);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) m.row(i) = rows[i];
    return m;
}

// cube corners (±1,±1,±1): index bit k flips coordinate k (0 = +)
std::vector<Eigen::RowVector3d> cube_corners() {
    std::vector<Eigen::RowVector3d> rows;
    for (int s = 0; s < 8; ++s)
        rows.push_back({(s & 1) ? -1.0 : 1.0, (s & 2) ? -1.0 : 1.0, (s & 4) ? -1.0 : 1.0});
    return rows;
}

Eigen::MatrixXd dodecahedron_coordinates() {
    auto rows = cube_corners();
    double inv = 1.0 / kPhi;
    push_signed(rows, 0, inv, kPhi);
    push_signed(rows, inv, kPhi, 0);
    push_signed(rows, kPhi, 0, inv);
    return rows_to_matrix(rows);
}

Eigen::MatrixXd icosahedron_coordinates() {
    std::vector<Eigen::RowVector3d> rows;
    push_signed(rows, 0, 1, kPhi);
    push_signed(rows, 1, kPhi, 0);
    push_signed(rows, kPhi, 0, 1);
    return rows_to_matrix(rows);
}

Eigen::MatrixXd cuboctahedron_coordinates() {
    std::vector<Eigen::RowVector3d> rows;
    push_signed(rows, 1, 1, 0);
    push_signed(rows, 1, 0, 1);
    push_signed(rows, 0, 1, 1);
    return rows_to_matrix(rows);
}

// 8 cube corners, then the 6 axis points ±2 e_k in the order +x,-x,+y,-y,+z,-z
Eigen::MatrixXd rhombic_dodecahedron_coordinates() {
    auto rows = cube_corners();
    for (int k = 0; k < 3; ++k)
        for (double s : {2.0, -2.0}) {
            Eigen::RowVector3d r(0, 0, 0);
            r[k] = s;
            rows.push_back(r);
        }
    return rows_to_matrix(rows);
}

// sqrt(2)·(±1,0,0,0) and permutations (order +e1,-e1,...,+e4,-e4), then
// sqrt(2)·(±1/2,±1/2,±1/2,±1/2) with index bit k flipping coordinate k
Eigen::MatrixXd cell24_coordinates() {
    double rt2 = std::sqrt(2.0);
    Eigen::MatrixXd v(24, 4);
    int row = 0;
    for (int k = 0; k < 4; ++k)
        for (double s : {1.0, -1.0}) {
            v.row(row).setZero();
            v(row, k) = s * rt2;
            ++row;
        }
    for (int s = 0; s < 16; ++s) {
        for (int k = 0; k < 4; ++k) v(row, k) = ((s >> k) & 1) ? -rt2 / 2 : rt2 / 2;
        ++row;
    }
    return v;
}

void need_params(const std::string& name, const std::vector<int>& params, size_t count) {
    if (params.size() != count)
        throw precondition_error(name + " expects " + std::to_string(count) + " parameter(s)");
}

} // namespace

Graph catalog(const std::string& name, const std::vector<int>& params) {
    if (name == "cycle") {
        need_params(name, params, 1);
        int n = params[0];
        if (n < 3) throw precondition_error("cycle needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(edges));
    }
    if (name == "complete") {
        need_params(name, params, 1);
        int n = params[0];
        if (n < 1) throw precondition_error("complete needs n >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph(n, std::move(edges));
    }
    if (name == "complete_bipartite") {
        need_params(name, params, 2);
        int a = params[0], b = params[1];
        if (a < 1 || b < 1) throw precondition_error("complete_bipartite needs parts >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
        return Graph(a + b, std::move(edges));
    }
    if (name == "complete_multipartite") {
        if (params.size() < 2)
            throw precondition_error("complete_multipartite needs at least 2 parts");
        std::vector<int> start{0};
        for (int p : params) {
            if (p < 1) throw precondition_error("part sizes must be >= 1");
            start.push_back(start.back() + p);
        }
        int n = start.back();
        std::vector<int> part(n);
        for (size_t k = 0; k < params.size(); ++k)
            for (int i = start[k]; i < start[k + 1]; ++i) part[i] = static_cast<int>(k);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (part[i] != part[j]) edges.emplace_back(i, j);
        return Graph(n, std::move(edges));
    }
    if (name == "prism") {
        // two n-cycles 0..n-1 and n..2n-1 joined by rungs {i, n+i}
        need_params(name, params, 1);
        int n = params[0];
        if (n < 3) throw precondition_error("prism needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, (i + 1) % n);
            edges.emplace_back(n + i, n + (i + 1) % n);
            edges.emplace_back(i, n + i);
        }
        return Graph(2 * n, std::move(edges));
    }
    if (name == "petersen") {
        // vertices = 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint
        std::vector<std::pair<int, int>> sets;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) sets.emplace_back(i, j);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v) {
                auto [a, b] = sets[u];
                auto [c, d] = sets[v];
                if (a != c && a != d && b != c && b != d) edges.emplace_back(u, v);
            }
        return Graph(10, std::move(edges));
    }
    if (name == "truncated_tetrahedron") {
        // corner (i,j) of the triangle replacing tetrahedron vertex i, facing
        // neighbor j; index = 3i + rank of j among {0..3}\{i}. Triangle edges
        // within each corner set, plus (i,j)-(j,i) across.
        need_params(name, params, 0);
        auto idx = [](int i, int j) {
            int pos = 0;
            for (int k = 0; k < 4; ++k) {
                if (k == i) continue;
                if (k == j) break;
                ++pos;
            }
            return 3 * i + pos;
        };
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 4; ++i) {
            std::vector<int> corner;
            for (int j = 0; j < 4; ++j)
                if (j != i) corner.push_back(idx(i, j));
            edges.emplace_back(corner[0], corner[1]);
            edges.emplace_back(corner[0], corner[2]);
            edges.emplace_back(corner[1], corner[2]);
            for (int j = i + 1; j < 4; ++j) edges.emplace_back(idx(i, j), idx(j, i));
        }
        return Graph(12, std::move(edges));
    }
    if (name == "dodecahedron") {
        need_params(name, params, 0);
        return graph_from_coordinates(dodecahedron_coordinates());
    }
    if (name == "icosahedron") {
        need_params(name, params, 0);
        return graph_from_coordinates(icosahedron_coordinates());
    }
    if (name == "cuboctahedron") {
        need_params(name, params, 0);
        return graph_from_coordinates(cuboctahedron_coordinates());
    }
    if (name == "rhombic_dodecahedron") {
        need_params(name, params, 0);
        return graph_from_coordinates(rhombic_dodecahedron_coordinates());
    }
    if (name == "cell24") {
        need_params(name, params, 0);
        return graph_from_coordinates(cell24_coordinates());
    }
    throw precondition_error("unknown catalog graph: " + name);
}

std::optional<Eigen::MatrixXd> catalog_coordinates(const std::string& name) {
    if (name == "dodecahedron") return dodecahedron_coordinates();
    if (name == "icosahedron") return icosahedron_coordinates();
    if (name == "cuboctahedron") return cuboctahedron_coordinates();
    if (name == "rhombic_dodecahedron") return rhombic_dodecahedron_coordinates();
    if (name == "cell24") return cell24_coordinates();
    return std::nullopt;
}

std::vector<CatalogEntry> catalog_list() {
    return {
        {"cycle", "n (>= 3)", "cycle C_n"},
        {"complete", "n (>= 1)", "complete graph K_n"},
        {"complete_bipartite", "a b", "complete bipartite K_{a,b}"},
        {"complete_multipartite", "n1 n2 ...", "complete multipartite graph"},
        {"prism", "n (>= 3)", "n-gonal prism (C_n x K_2)"},
        {"petersen", "", "Petersen graph (Kneser graph on 2-subsets of 5)"},
        {"dodecahedron", "", "edge-graph of the regular dodecahedron"},
        {"icosahedron", "", "edge-graph of the regular icosahedron"},
        {"truncated_tetrahedron", "", "edge-graph of the truncated tetrahedron"},
        {"cuboctahedron", "", "edge-graph of the cuboctahedron"},
        {"rhombic_dodecahedron", "", "edge-graph of the rhombic dodecahedron"},
        {"cell24", "", "edge-graph of the 24-cell"},
    };
}

// ---------------------------------------------------------------------------
// parsing / serialization (graph6 codec lives in graph6.cpp)
// ---------------------------------------------------------------------------

namespace {

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        long long i, j;
        if (!(ls >> i >> j))
            throw parse_error("edge list line " + std::to_string(lineno) + ": expected two integers");
        std::string rest;
        if (ls >> rest)
            throw parse_error("edge list line " + std::to_string(lineno) + ": trailing tokens");
        if (i < 0 || j < 0) throw parse_error("negative vertex index");
        if (i == j) throw parse_error("loop rejected at line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(i, j)));
    }
    try {
        return Graph(max_vertex + 1, std::move(edges));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

} // namespace

// canonical JSON codec (also used by serialize.cpp)
std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto& e = j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) e.push_back({a, b});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph json needs fields \"n\" and \"edges\"");
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw parse_error("edge entries must be pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph json: ") + e.what());
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return graph6_decode(text);
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::json: return graph_from_json(text);
    }
    throw parse_error("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return graph6_encode(g);
        case GraphFormat::edge_list: {
            std::string out;
            for (auto [i, j] : g.edges())
                out += std::to_string(i) + " " + std::to_string(j) + "\n";
            return out;
        }
        case GraphFormat::json: return to_json(g);
    }
    throw parse_error("unknown graph format");
}

} // namespace grt

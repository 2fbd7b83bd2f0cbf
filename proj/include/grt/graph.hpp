#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace grt {

// Thrown when a documented precondition is violated (CLI exit code 2).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed external input (CLI exit code 3).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph. Edges are stored as (i,j) with i<j, sorted;
// the adjacency list is sorted per vertex. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    bool adjacent(int i, int j) const;
    int degree(int i) const { return static_cast<int>(adj_[i].size()); }

    // common degree if regular
    std::optional<int> regular_degree() const;

    Eigen::MatrixXd adjacency() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// All-pairs shortest path lengths (BFS); dist = -1 marks unreachable pairs.
struct DistanceTable {
    Eigen::MatrixXi dist;
    int diam = 0;       // max over finite entries
    bool connected = true;
};

DistanceTable distances(const Graph& g);

// Named example graphs with frozen vertex orderings (documented in graph.cpp,
// next to each construction). Families: cycle(n), complete(n),
// complete_bipartite(a,b), complete_multipartite(n1,...,nk), prism(n),
// petersen, dodecahedron, icosahedron, truncated_tetrahedron, cuboctahedron,
// rhombic_dodecahedron, cell24.
Graph catalog(const std::string& name, const std::vector<int>& params = {});

struct CatalogEntry {
    std::string name;
    std::string params;      // human-readable parameter signature
    std::string description;
};
std::vector<CatalogEntry> catalog_list();

// Construction coordinates for the families that are built from point sets
// (dodecahedron, icosahedron, cuboctahedron, rhombic_dodecahedron, cell24);
// rows follow the catalog vertex order. Empty optional for the others.
std::optional<Eigen::MatrixXd> catalog_coordinates(const std::string& name);

// (a,b) ~ (a',b') iff equal in one coordinate and adjacent in the other;
// vertex (a,b) gets index a*h.n() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

enum class GraphFormat { graph6, edge_list, json };

Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// graph6 codec (bit-exact per the published format; n <= 258047 covers the
// desk scale here)
Graph graph6_decode(const std::string& text);
std::string graph6_encode(const Graph& g);

} // namespace grt

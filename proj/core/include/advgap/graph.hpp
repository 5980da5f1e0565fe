#ifndef ADVGAP_GRAPH_HPP
#define ADVGAP_GRAPH_HPP

/// Simple loopless undirected graphs over vertices 0..n-1, used both for
/// conflict graphs built from data and for plain graphs fed to the
/// generators. Wire format: { "n": int, "edges": [[i, j], ...] }, 0-based.

#include <string>
#include <utility>
#include <vector>

namespace advgap {

class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);

    int size() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }
    int degree(int v) const { return degree_[v]; }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> neighbors(int v) const;

    Graph complement() const;

    /// First triangle in lexicographic order, or empty.
    std::vector<int> find_triangle() const;
    bool is_triangle_free() const { return find_triangle().empty(); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    std::string to_json() const;
    static Graph from_json(const std::string& text);

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<unsigned char> adj_;
    std::vector<int> degree_;
};

}  // namespace advgap

#endif

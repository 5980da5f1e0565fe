#include "advgap/graph.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "advgap/errors.hpp"

namespace advgap {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw ParseError("graph with negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(n, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loop edge rejected");
    if (has_edge(u, v)) return;
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
    ++degree_[u];
    ++degree_[v];
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges_.begin(), edges_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v)) out.push_back(u);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
}

std::vector<int> Graph::find_triangle() const {
    for (const auto& [u, v] : edges_)
        for (int w = 0; w < n_; ++w)
            if (w != u && w != v && has_edge(u, w) && has_edge(v, w))
                return {u, v, w};
    return {};
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : edges_) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed graph JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs fields 'n' and 'edges'");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair [i, j]");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

}  // namespace advgap

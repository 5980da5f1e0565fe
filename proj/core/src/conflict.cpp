#include "advgap/conflict.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "advgap/errors.hpp"

namespace advgap {

namespace {

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);  // 1-based in messages
    }
    return out + "}";
}

}  // namespace

ConflictGraph build_conflict_graph(const DiscreteDistribution& dist,
                                   const Rational& eps, const NormSpec& norm,
                                   double tol) {
    const int n = dist.size();
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dist.point(i).label == dist.point(j).label) continue;
            if (!norm.is_infinity() && !norm.is_integer_p()) {
                // tolerance band check for the inexact path
                const auto v = balls_intersect(
                    {dist.point(i).coords, dist.point(j).coords}, eps, norm, tol);
                if (v.status == BallStatus::Inconclusive)
                    throw InconclusiveError(
                        "ball intersection inconclusive for pair " +
                        set_to_string({i, j}) + "; perturb epsilon");
                if (v.status == BallStatus::NonEmpty) g.add_edge(i, j);
                continue;
            }
            if (pairwise_conflict(dist.point(i), dist.point(j), eps, norm, tol))
                g.add_edge(i, j);
        }
    }
    return g;
}

ConflictHypergraph build_conflict_hypergraph(const DiscreteDistribution& dist,
                                             const Rational& eps,
                                             const NormSpec& norm, double tol) {
    const int n = dist.size();
    const Graph g = build_conflict_graph(dist, eps, norm, tol);

    ConflictHypergraph h;
    h.n = n;

    // Depth-first search over cliques of g in increasing vertex order. Every
    // hyperedge is a clique (pairwise conflicts), prefixes of a sorted
    // hyperedge are hyperedges (downward closure), so ascending extension
    // with ball-intersection pruning reaches every maximal hyperedge once.
    std::vector<int> current;
    std::vector<std::vector<Rational>> current_pts;

    auto joint_witness = [&](const std::vector<int>& members)
        -> std::optional<HyperedgeWitness> {
        std::vector<std::vector<Rational>> pts;
        pts.reserve(members.size());
        for (int v : members) pts.push_back(dist.point(v).coords);
        const auto verdict = balls_intersect(pts, eps, norm, tol);
        if (verdict.status == BallStatus::Inconclusive)
            throw InconclusiveError("ball intersection inconclusive for " +
                                    set_to_string(members) +
                                    "; perturb epsilon");
        if (verdict.status == BallStatus::Empty) return std::nullopt;
        HyperedgeWitness w;
        w.approx = verdict.witness;
        w.exact = verdict.witness_exact;
        return w;
    };

    std::vector<std::vector<int>> found;
    std::vector<HyperedgeWitness> found_witness;

    auto dfs = [&](auto&& self, const std::vector<int>& members,
                   const HyperedgeWitness& witness) -> void {
        bool maximal = true;
        for (int v = 0; v < n; ++v) {
            if (std::binary_search(members.begin(), members.end(), v)) continue;
            bool clique = true;
            for (int u : members)
                if (!g.has_edge(u, v)) { clique = false; break; }
            if (!clique) continue;
            std::vector<int> next = members;
            next.insert(std::lower_bound(next.begin(), next.end(), v), v);
            const auto w = joint_witness(next);
            if (!w) continue;
            maximal = false;
            if (v > members.back()) self(self, next, *w);
        }
        if (maximal) {
            found.push_back(members);
            found_witness.push_back(witness);
        }
    };

    for (int v = 0; v < n; ++v) {
        HyperedgeWitness w;
        w.approx = to_double(dist.point(v).coords);
        w.exact = dist.point(v).coords;
        dfs(dfs, {v}, w);
    }

    // sort family lexicographically, keeping witnesses aligned
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return found[a] < found[b];
    });
    for (std::size_t i : order) {
        h.max_edges.push_back(found[i]);
        h.witnesses.push_back(found_witness[i]);
    }
    return h;
}

CliqueHypergraph build_clique_hypergraph(const Graph& g, std::size_t max_cliques) {
    const int n = g.size();
    CliqueHypergraph c;
    c.n = n;

    // Bron-Kerbosch with pivoting.
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    auto bk = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
        if (p.empty() && x.empty()) {
            if (cliques.size() >= max_cliques)
                throw BudgetError("maximal clique count exceeds " +
                                  std::to_string(max_cliques));
            cliques.push_back(r);
            return;
        }
        // pivot: vertex of p ∪ x with most neighbors in p
        int pivot = -1, best = -1;
        for (const auto& pool : {p, x}) {
            for (int u : pool) {
                int cnt = 0;
                for (int v : p)
                    if (g.has_edge(u, v)) ++cnt;
                if (cnt > best) { best = cnt; pivot = u; }
            }
        }
        std::vector<int> candidates;
        for (int v : p)
            if (pivot < 0 || !g.has_edge(pivot, v)) candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> p2, x2;
            for (int u : p)
                if (g.has_edge(u, v)) p2.push_back(u);
            for (int u : x)
                if (g.has_edge(u, v)) x2.push_back(u);
            r.push_back(v);
            self(self, std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };

    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    bk(bk, all, {});

    for (auto& q : cliques) std::sort(q.begin(), q.end());
    std::sort(cliques.begin(), cliques.end());
    c.max_edges = std::move(cliques);
    return c;
}

bool hyperedge_contains(const std::vector<std::vector<int>>& max_edges,
                        const std::vector<int>& s) {
    if (s.empty()) throw ParseError("hyperedge_contains: empty set");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& e : max_edges)
        if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end()))
            return true;
    return false;
}

std::string hypergraph_to_json(int n,
                               const std::vector<std::vector<int>>& max_edges) {
    nlohmann::ordered_json j;
    j["n"] = n;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : max_edges) edges.push_back(e);
    j["max_edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

std::pair<int, std::vector<std::vector<int>>> hypergraph_from_json(
    const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed hypergraph JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("n"))
        throw ParseError("hypergraph JSON needs fields 'n' and 'max_edges'");
    const int n = j.at("n").get<int>();
    std::vector<std::vector<int>> edges;
    const char* key = j.contains("max_edges") ? "max_edges"
                      : j.contains("edges")   ? "edges"
                                              : nullptr;
    if (!key) throw ParseError("hypergraph JSON needs 'max_edges' (or 'edges')");
    for (const auto& e : j.at(key)) {
        std::vector<int> edge = e.get<std::vector<int>>();
        if (edge.empty()) throw ParseError("empty hyperedge");
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        for (int v : edge)
            if (v < 0 || v >= n) throw ParseError("hyperedge vertex out of range");
        edges.push_back(std::move(edge));
    }
    return {n, std::move(edges)};
}

}  // namespace advgap

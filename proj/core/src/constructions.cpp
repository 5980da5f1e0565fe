#include "advgap/constructions.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "advgap/conflict.hpp"
#include "advgap/packing.hpp"

namespace advgap {

Rational canonical_basis_default_eps() { return Rational(7, 9); }

DiscreteDistribution canonical_basis_distribution(int k) {
    if (k < 2) throw ParseError("canonical basis needs K >= 2");
    std::vector<LabeledPoint> support;
    support.reserve(k);
    for (int i = 0; i < k; ++i) {
        LabeledPoint pt;
        pt.coords.assign(k, Rational(0));
        pt.coords[i] = 1;
        pt.label = i + 1;
        support.push_back(std::move(pt));
    }
    return DiscreteDistribution::uniform(std::move(support), k);
}

std::vector<std::vector<Rational>> embed_linf(const Graph& g, const Rational& eps) {
    const int n = g.size();
    const Rational near = Rational(9, 5) * eps;   // 0.9 * 2 eps
    const Rational far = Rational(11, 5) * eps;   // 1.1 * 2 eps
    std::vector<std::vector<Rational>> pts(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i)
                pts[i][j] = 0;
            else
                pts[i][j] = g.has_edge(i, j) ? near : far;
        }
    return pts;
}

std::vector<std::vector<Rational>> embed_lp(const Graph& g, const Rational& eps,
                                            const NormSpec& norm) {
    if (norm.is_infinity()) throw ParseError("embed_lp needs a finite p");
    const int n = g.size();
    const int m = g.edge_count();
    const unsigned bits = 48;

    // p-th roots as dyadic rationals; non-integer p rounds p upward only for
    // the root computation is not valid, so compute with the rational p via
    // double-precision seeds refined by exact bisection when p is fractional.
    const bool integral = norm.is_integer_p();
    const unsigned long p_int = integral ? norm.p_integer() : 0;

    auto root_scaled = [&](long numer) -> Rational {
        // 2 eps * (numer / (2n - 1))^(1/p)
        Rational ratio(numer, 2L * n - 1);
        ratio.canonicalize();
        if (integral) return 2 * eps * dyadic_root(ratio, p_int, bits);
        // fractional p = a/b: x = ratio^(b/a) = (ratio^b)^(1/a)
        const unsigned long a = norm.p().get_num().get_ui();
        const unsigned long b = norm.p().get_den().get_ui();
        return 2 * eps * dyadic_root(pow_int(ratio, b), a, bits);
    };

    const Rational incidence = root_scaled(1);
    std::vector<std::vector<Rational>> pts(
        n, std::vector<Rational>(static_cast<std::size_t>(n) + m, Rational(0)));
    for (int k = 0; k < m; ++k) {
        const auto [u, v] = g.edges()[k];
        pts[u][k] = incidence;
        pts[v][k] = incidence;
    }
    for (int i = 0; i < n; ++i) pts[i][m + i] = root_scaled(n - g.degree(i));
    return pts;
}

Coloring greedy_coloring(const Graph& g) {
    const int n = g.size();
    Coloring res;
    res.color.assign(n, 0);
    std::vector<int> saturation(n, 0);
    for (int step = 0; step < n; ++step) {
        // DSATUR: most saturated, then highest degree, then lowest index
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (res.color[v] != 0) continue;
            if (pick == -1 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        std::vector<char> used(n + 2, 0);
        for (int u : g.neighbors(pick))
            if (res.color[u] != 0) used[res.color[u]] = 1;
        int c = 1;
        while (used[c]) ++c;
        res.color[pick] = c;
        res.count = std::max(res.count, c);
        for (int u : g.neighbors(pick)) {
            if (res.color[u] != 0) continue;
            // recompute saturation of u
            std::vector<char> seen(n + 2, 0);
            int s = 0;
            for (int w : g.neighbors(u))
                if (res.color[w] != 0 && !seen[res.color[w]]) {
                    seen[res.color[w]] = 1;
                    ++s;
                }
            saturation[u] = s;
        }
    }
    return res;
}

Dataset graph_to_distribution(const Graph& g, const Rational& eps,
                              const NormSpec& norm) {
    if (g.size() == 0) throw ParseError("cannot embed the empty graph");
    const auto points =
        norm.is_infinity() ? embed_linf(g, eps) : embed_lp(g, eps, norm);
    const auto coloring = greedy_coloring(g);

    std::vector<LabeledPoint> support(g.size());
    for (int v = 0; v < g.size(); ++v) {
        support[v].coords = points[v];
        support[v].label = coloring.color[v];
    }
    Dataset ds{DiscreteDistribution::uniform(std::move(support), coloring.count),
               eps, norm};

    const Graph rebuilt = build_conflict_graph(ds.dist, ds.epsilon, ds.norm);
    if (!(rebuilt == g))
        throw std::logic_error(
            "embedding round-trip failed: conflict graph differs from input");
    return ds;
}

Graph fibrate(const Graph& g) {
    const int n = g.size();
    Graph h(6 * n);
    auto id = [n](int v, int copy) { return copy * n + v; };
    for (int c = 0; c < 6; ++c) {
        const int c1 = (c + 1) % 6;
        const int c3 = (c + 3) % 6;
        for (const auto& [u, v] : g.edges()) {
            h.add_edge(id(u, c), id(v, c));        // within-copy
            h.add_edge(id(u, c), id(v, c1));       // cross, both orientations
            h.add_edge(id(v, c), id(u, c1));
        }
        for (int u = 0; u < n; ++u) h.add_edge(id(u, c), id(u, c3));  // antipodal
    }
    return h;
}

Graph iterate_fibration(const Graph& g, int t, int vertex_cap) {
    if (t < 0) throw ParseError("fibration count must be >= 0");
    long long size = g.size();
    for (int i = 0; i < t; ++i) size *= 6;
    if (size > vertex_cap)
        throw BudgetError("fibration would create " + std::to_string(size) +
                          " vertices (cap " + std::to_string(vertex_cap) + ")");
    Graph out = g;
    for (int i = 0; i < t; ++i) out = fibrate(out);
    return out;
}

int independence_number(const Graph& g, long node_budget) {
    const auto inst =
        PackingInstance::from_graph(g, std::vector<Rational>(g.size(), Rational(1)));
    const auto sol = solve_integral(inst, node_budget);
    if (!sol.proven_optimal)
        throw BudgetError("independence number search exceeded the node budget");
    return static_cast<int>(sol.value.get_num().get_si());
}

Graph named_graph(const std::string& spec) {
    auto suffix_int = [&](std::size_t skip) {
        const std::string tail = spec.substr(skip);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("unknown graph spec '" + spec + "'");
        return std::stoi(tail);
    };
    if (!spec.empty() && (spec[0] == '{' || spec[0] == '['))
        return Graph::from_json(spec);
    if (spec.size() >= 2 && spec[0] == 'c') {
        const int n = suffix_int(1);
        if (n < 3) throw ParseError("cycle needs at least 3 vertices");
        Graph g(n);
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }
    if (spec.size() >= 2 && spec[0] == 'k') {
        const int n = suffix_int(1);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    if (spec.rfind("path", 0) == 0) {
        const int n = suffix_int(4);
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }
    if (spec.rfind("empty", 0) == 0) return Graph(suffix_int(5));
    throw ParseError("unknown graph spec '" + spec + "'");
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed,
                   bool triangle_free) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(
        edge_prob * static_cast<double>(std::numeric_limits<std::uint32_t>::max()));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t draw = rng() & 0xffffffffull;
            if (draw >= threshold) continue;
            if (triangle_free) {
                bool closes = false;
                for (int w = 0; w < n && !closes; ++w)
                    closes = (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w));
                if (closes) continue;
            }
            g.add_edge(u, v);
        }
    }
    return g;
}

Dataset example_dataset(const std::string& name) {
    if (name == "pentagon") {
        // five conflict pairs in a cycle, one class per point
        const Dataset embedded = graph_to_distribution(
            named_graph("c5"), Rational(1, 2), NormSpec::p_norm(Rational(2)));
        std::vector<LabeledPoint> support = embedded.dist.support();
        for (int i = 0; i < 5; ++i) support[i].label = i + 1;
        return Dataset{DiscreteDistribution::uniform(std::move(support), 5),
                       embedded.epsilon, embedded.norm};
    }
    if (name == "triangle-pendant") {
        // three points with a joint overlap plus a pendant conflict at eps=1
        std::vector<LabeledPoint> support(4);
        support[0].coords = {Rational(0), Rational(0)};
        support[1].coords = {Rational(8, 5), Rational(0)};
        support[2].coords = {Rational(4, 5), Rational(1)};
        support[3].coords = {Rational(4, 5), Rational(14, 5)};
        for (int i = 0; i < 4; ++i) support[i].label = i + 1;
        return Dataset{DiscreteDistribution::uniform(std::move(support), 4),
                       Rational(1), NormSpec::p_norm(Rational(2))};
    }
    if (name == "antihole7") {
        // seven max-norm points at eps = 0.49: cyclically consecutive pairs
        // stay apart, every other pair conflicts
        const int n = 7;
        std::vector<LabeledPoint> support(n);
        for (int i = 0; i < n; ++i) {
            support[i].coords.assign(n, Rational(0));
            for (int j = 0; j < n; ++j) {
                Rational c(j + 1, 10);
                c.canonicalize();
                support[i].coords[j] = c;
            }
            support[i].coords[(i + 6) % 7] = 1;
            support[i].coords[i] = 0;
            support[i].label = i + 1;
        }
        return Dataset{DiscreteDistribution::uniform(std::move(support), n),
                       Rational(49, 100), NormSpec::infinity()};
    }
    if (name == "basis3") {
        return Dataset{canonical_basis_distribution(3), canonical_basis_default_eps(),
                       NormSpec::p_norm(Rational(2))};
    }
    throw ParseError("unknown example dataset '" + name + "'");
}

}  // namespace advgap

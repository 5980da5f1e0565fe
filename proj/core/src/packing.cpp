#include "advgap/packing.hpp"

#include <algorithm>
#include <stdexcept>

#include "simplex.hpp"

namespace advgap {

namespace {

/// Drop constraints contained in another, dedupe, sort lexicographically.
std::vector<std::vector<int>> antichain(std::vector<std::vector<int>> cons) {
    for (auto& e : cons) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::sort(cons.begin(), cons.end());
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
    std::vector<std::vector<int>> keep;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cons.size() && !dominated; ++j) {
            if (i == j || cons[j].size() < cons[i].size()) continue;
            if (cons[j].size() == cons[i].size() && !(cons[i] < cons[j])) continue;
            dominated = std::includes(cons[j].begin(), cons[j].end(),
                                      cons[i].begin(), cons[i].end());
        }
        if (!dominated) keep.push_back(cons[i]);
    }
    return keep;
}

std::vector<std::vector<int>> cover_uncovered(
    int n, std::vector<std::vector<int>> cons) {
    std::vector<char> covered(n, 0);
    for (const auto& e : cons)
        for (int v : e) covered[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) cons.push_back({v});
    std::sort(cons.begin(), cons.end());
    return cons;
}

}  // namespace

PackingInstance PackingInstance::from_hypergraph(const ConflictHypergraph& h,
                                                 std::vector<Rational> weights) {
    PackingInstance inst;
    inst.n = h.n;
    inst.constraints = cover_uncovered(h.n, h.max_edges);
    inst.weights = std::move(weights);
    inst.validate();
    return inst;
}

PackingInstance PackingInstance::from_clique_hypergraph(
    const CliqueHypergraph& c, std::vector<Rational> weights) {
    PackingInstance inst;
    inst.n = c.n;
    inst.constraints = cover_uncovered(c.n, c.max_edges);
    inst.weights = std::move(weights);
    inst.validate();
    return inst;
}

PackingInstance PackingInstance::from_graph(const Graph& g,
                                            std::vector<Rational> weights) {
    PackingInstance inst;
    inst.n = g.size();
    std::vector<std::vector<int>> cons;
    for (const auto& [u, v] : g.edges()) cons.push_back({u, v});
    inst.constraints = cover_uncovered(g.size(), std::move(cons));
    inst.weights = std::move(weights);
    inst.validate();
    return inst;
}

PackingInstance PackingInstance::from_raw(int n,
                                          std::vector<std::vector<int>> constraints,
                                          std::vector<Rational> weights) {
    PackingInstance inst;
    inst.n = n;
    inst.constraints = cover_uncovered(n, antichain(std::move(constraints)));
    inst.weights = std::move(weights);
    inst.validate();
    return inst;
}

PackingInstance PackingInstance::normalized() const {
    return from_raw(n, constraints, weights);
}

void PackingInstance::validate() const {
    if (n <= 0) throw ParseError("packing instance needs n >= 1");
    if (static_cast<int>(weights.size()) != n)
        throw ParseError("weight vector length mismatch");
    for (const auto& w : weights)
        if (w < 0) throw ParseError("packing weights must be nonnegative");
    for (const auto& e : constraints) {
        if (e.empty()) throw ParseError("empty packing constraint");
        for (int v : e)
            if (v < 0 || v >= n) throw ParseError("constraint vertex out of range");
    }
}

FractionalSolution solve_fractional(const PackingInstance& inst) {
    inst.validate();
    const std::size_t m = inst.constraints.size();
    const std::size_t n = static_cast<std::size_t>(inst.n);

    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(m, Rational(1));
    for (std::size_t r = 0; r < m; ++r)
        for (int v : inst.constraints[r]) rows[r][v] = 1;

    const auto lp = detail::solve_simplex(rows, rhs, inst.weights);

    FractionalSolution sol;
    sol.q = lp.x;
    sol.dual = lp.y;
    sol.value = lp.value;
    sol.dual_value = 0;
    for (const auto& y : lp.y) sol.dual_value += y;

    // exact certificate checks: primal feasible, dual feasible, equal values
    Rational primal(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (sol.q[j] < 0 || sol.q[j] > 1)
            throw std::logic_error("fractional solution outside [0,1]");
        primal += inst.weights[j] * sol.q[j];
    }
    for (std::size_t r = 0; r < m; ++r) {
        Rational s(0);
        for (int v : inst.constraints[r]) s += sol.q[v];
        if (s > 1) throw std::logic_error("fractional solution violates a constraint");
        if (sol.dual[r] < 0) throw std::logic_error("negative dual value");
    }
    std::vector<Rational> cover(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        for (int v : inst.constraints[r]) cover[v] += sol.dual[r];
    for (std::size_t j = 0; j < n; ++j)
        if (cover[j] < inst.weights[j])
            throw std::logic_error("dual cover certificate infeasible");
    if (primal != sol.value || sol.value != sol.dual_value)
        throw std::logic_error("strong duality violated (solver bug)");
    return sol;
}

namespace {

struct BranchState {
    const PackingInstance* inst;
    // per vertex: the constraints it appears in
    std::vector<std::vector<const std::vector<int>*>> member_constraints;
    std::vector<std::uint8_t> best_q;
    Rational best_value;
    bool have_incumbent = false;
    long nodes = 0;
    long budget = 0;
    bool budget_hit = false;
};

/// Cheap upper bound: greedily pick disjoint constraints; inside each picked
/// constraint at most one member can be taken, so only the heaviest free
/// member counts. Everything untouched counts fully.
Rational combinatorial_bound(const BranchState& st,
                             const std::vector<int>& assign,
                             const Rational& fixed_value) {
    const auto& inst = *st.inst;
    Rational bound = fixed_value;
    std::vector<char> used(inst.n, 0);
    for (const auto& e : inst.constraints) {
        Rational sum(0), best(0);
        int free_count = 0;
        bool overlap = false;
        for (int v : e) {
            if (assign[v] != -1) continue;
            if (used[v]) { overlap = true; break; }
            ++free_count;
            sum += inst.weights[v];
            if (inst.weights[v] > best) best = inst.weights[v];
        }
        if (overlap || free_count < 2) continue;
        for (int v : e)
            if (assign[v] == -1) used[v] = 1;
        bound += best;
    }
    for (int v = 0; v < inst.n; ++v)
        if (assign[v] == -1 && !used[v]) bound += inst.weights[v];
    return bound;
}

void branch(BranchState& st, std::vector<int>& assign, const Rational& fixed_value);

void fix_one(BranchState& st, std::vector<int>& assign, int v,
             Rational fixed_value) {
    // setting v = 1 forces every co-member of a shared constraint to 0
    std::vector<std::pair<int, int>> trail;  // (vertex, previous value)
    trail.emplace_back(v, assign[v]);
    assign[v] = 1;
    fixed_value += st.inst->weights[v];
    for (const auto* e : st.member_constraints[v]) {
        for (int u : *e) {
            if (u == v) continue;
            if (assign[u] == -1) {
                trail.emplace_back(u, -1);
                assign[u] = 0;
            }
        }
    }
    branch(st, assign, fixed_value);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        assign[it->first] = it->second;
}

void branch(BranchState& st, std::vector<int>& assign, const Rational& fixed_value) {
    if (st.budget_hit) return;
    if (++st.nodes > st.budget) {
        st.budget_hit = true;
        return;
    }
    const auto& inst = *st.inst;

    if (st.have_incumbent &&
        combinatorial_bound(st, assign, fixed_value) <= st.best_value)
        return;

    // residual LP over free vertices
    std::vector<int> free_vars;
    std::vector<int> position(inst.n, -1);
    for (int v = 0; v < inst.n; ++v) {
        if (assign[v] == -1) {
            position[v] = static_cast<int>(free_vars.size());
            free_vars.push_back(v);
        }
    }

    if (free_vars.empty()) {
        if (!st.have_incumbent || fixed_value > st.best_value) {
            st.best_value = fixed_value;
            st.have_incumbent = true;
            st.best_q.assign(inst.n, 0);
            for (int v = 0; v < inst.n; ++v) st.best_q[v] = (assign[v] == 1);
        }
        return;
    }

    std::vector<std::vector<int>> res_cons;
    for (const auto& e : inst.constraints) {
        std::vector<int> r;
        for (int v : e)
            if (assign[v] == -1) r.push_back(position[v]);
        if (r.size() >= 2) res_cons.push_back(std::move(r));
    }
    std::vector<Rational> res_w(free_vars.size());
    for (std::size_t i = 0; i < free_vars.size(); ++i)
        res_w[i] = inst.weights[free_vars[i]];

    const auto residual = PackingInstance::from_raw(
        static_cast<int>(free_vars.size()), std::move(res_cons), std::move(res_w));
    const auto lp = solve_fractional(residual);

    const Rational upper = fixed_value + lp.value;
    if (st.have_incumbent && upper <= st.best_value) return;

    // integral LP solution solves this node outright
    int frac_var = -1;
    Rational frac_dist;
    for (std::size_t i = 0; i < lp.q.size(); ++i) {
        if (lp.q[i] == 0 || lp.q[i] == 1) continue;
        const Rational dist = rational_abs(lp.q[i] - Rational(1, 2));
        if (frac_var == -1 || dist < frac_dist) {
            frac_var = static_cast<int>(i);
            frac_dist = dist;
        }
    }
    if (frac_var == -1) {
        // check feasibility of the combined assignment (it is, by construction)
        if (!st.have_incumbent || upper > st.best_value) {
            st.best_value = upper;
            st.have_incumbent = true;
            st.best_q.assign(inst.n, 0);
            for (int v = 0; v < inst.n; ++v) st.best_q[v] = (assign[v] == 1);
            for (std::size_t i = 0; i < free_vars.size(); ++i)
                if (lp.q[i] == 1) st.best_q[free_vars[i]] = 1;
        }
        return;
    }

    const int v = free_vars[frac_var];
    fix_one(st, assign, v, fixed_value);
    assign[v] = 0;
    branch(st, assign, fixed_value);
    assign[v] = -1;
}

}  // namespace

IntegralSolution solve_integral(const PackingInstance& inst, long node_budget) {
    inst.validate();

    BranchState st;
    st.inst = &inst;
    st.budget = node_budget;
    st.member_constraints.assign(inst.n, {});
    for (const auto& e : inst.constraints)
        for (int v : e) st.member_constraints[v].push_back(&e);

    // greedy incumbent: heaviest first, ties by index
    {
        std::vector<int> order(inst.n);
        for (int v = 0; v < inst.n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return inst.weights[a] > inst.weights[b];
        });
        std::vector<std::uint8_t> q(inst.n, 0);
        std::vector<int> load(inst.constraints.size(), 0);
        std::vector<std::vector<int>> member_rows(inst.n);
        for (std::size_t r = 0; r < inst.constraints.size(); ++r)
            for (int v : inst.constraints[r]) member_rows[v].push_back(static_cast<int>(r));
        Rational value(0);
        for (int v : order) {
            bool ok = true;
            for (int r : member_rows[v])
                if (load[r] >= 1) { ok = false; break; }
            if (!ok) continue;
            q[v] = 1;
            value += inst.weights[v];
            for (int r : member_rows[v]) ++load[r];
        }
        st.best_q = std::move(q);
        st.best_value = value;
        st.have_incumbent = true;
    }

    std::vector<int> assign(inst.n, -1);
    // vertices whose only constraint is their own singleton are always taken
    for (int v = 0; v < inst.n; ++v) {
        const auto& rows = st.member_constraints[v];
        bool solo = !rows.empty();
        for (const auto* e : rows)
            if (e->size() != 1) { solo = false; break; }
        if (solo) assign[v] = 1;
    }
    Rational fixed(0);
    for (int v = 0; v < inst.n; ++v)
        if (assign[v] == 1) fixed += inst.weights[v];

    branch(st, assign, fixed);

    IntegralSolution sol;
    sol.q = st.best_q;
    sol.value = st.best_value;
    sol.proven_optimal = !st.budget_hit;
    sol.nodes_explored = st.nodes;

    // exact feasibility check of the reported packing
    for (const auto& e : inst.constraints) {
        int taken = 0;
        for (int v : e) taken += sol.q[v];
        if (taken > 1) throw std::logic_error("integral solution infeasible");
    }
    Rational value(0);
    for (int v = 0; v < inst.n; ++v)
        if (sol.q[v]) value += inst.weights[v];
    if (value != sol.value) throw std::logic_error("integral value mismatch");
    return sol;
}

namespace {

std::pair<FractionalSolution, IntegralSolution> solve_both(
    const DiscreteDistribution& dist, const Rational& eps, const NormSpec& norm,
    const RiskOptions& opts) {
    const auto h = build_conflict_hypergraph(dist, eps, norm, opts.tol);
    const auto inst = PackingInstance::from_hypergraph(h, dist.weights());
    auto fp = solve_fractional(inst);
    auto ip = solve_integral(inst, opts.node_budget);
    if (!ip.proven_optimal)
        throw BudgetError("branch-and-bound node budget exhausted");
    return {std::move(fp), std::move(ip)};
}

}  // namespace

Rational deterministic_adversarial_risk(const DiscreteDistribution& dist,
                                        const Rational& eps, const NormSpec& norm,
                                        const RiskOptions& opts) {
    const auto h = build_conflict_hypergraph(dist, eps, norm, opts.tol);
    const auto inst = PackingInstance::from_hypergraph(h, dist.weights());
    const auto ip = solve_integral(inst, opts.node_budget);
    if (!ip.proven_optimal)
        throw BudgetError("branch-and-bound node budget exhausted");
    return Rational(1) - ip.value;
}

Rational randomized_adversarial_risk(const DiscreteDistribution& dist,
                                     const Rational& eps, const NormSpec& norm,
                                     const RiskOptions& opts) {
    const auto h = build_conflict_hypergraph(dist, eps, norm, opts.tol);
    const auto inst = PackingInstance::from_hypergraph(h, dist.weights());
    return Rational(1) - solve_fractional(inst).value;
}

Rational randomization_gap(const DiscreteDistribution& dist, const Rational& eps,
                           const NormSpec& norm, const RiskOptions& opts) {
    const auto [fp, ip] = solve_both(dist, eps, norm, opts);
    return fp.value - ip.value;
}

}  // namespace advgap

#include "icc/bounds.hpp"

#include <algorithm>
#include <limits>

#include "bits.hpp"
#include "icc/error.hpp"

namespace icc {

using detail::bit;
using detail::for_each_bit;
using detail::lowest;

namespace {

// Drops vertices without an in- or out-neighbour inside the set; they lie on
// no cycle.
std::uint64_t trim(const Digraph& g, std::uint64_t s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for_each_bit(s, [&](Vertex v) {
            if ((g.out_mask(v) & s) == 0 || (g.in_mask(v) & s) == 0) {
                s &= ~bit(v);
                changed = true;
            }
        });
    }
    return s;
}

// Shortest cycle inside s by BFS from every vertex; vertices in path order.
std::vector<Vertex> shortest_cycle(const Digraph& g, std::uint64_t s) {
    std::vector<Vertex> best;
    for_each_bit(s, [&](Vertex root) {
        std::vector<Vertex> parent(static_cast<std::size_t>(g.n()) + 1, 0);
        std::vector<Vertex> queue{root};
        std::uint64_t seen = bit(root);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            Vertex v = queue[q];
            if (g.out_mask(v) & bit(root)) {
                std::vector<Vertex> cyc;
                for (Vertex x = v; x != root; x = parent[static_cast<std::size_t>(x)]) cyc.push_back(x);
                cyc.push_back(root);
                if (best.empty() || cyc.size() < best.size()) best.assign(cyc.rbegin(), cyc.rend());
                return;
            }
            for_each_bit(g.out_mask(v) & s & ~seen, [&](Vertex w) {
                seen |= bit(w);
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            });
        }
    });
    return best;
}

// Disjoint cycles found greedily: a lower bound on any feedback vertex set.
int greedy_packing(const Digraph& g, std::uint64_t s) {
    int count = 0;
    s = trim(g, s);
    while (s != 0) {
        auto c = shortest_cycle(g, s);
        if (c.empty()) break;
        ++count;
        for (Vertex v : c) s &= ~bit(v);
        s = trim(g, s);
    }
    return count;
}

bool hit_all_cycles(const Digraph& g, std::uint64_t s, int k, std::uint64_t& removed) {
    s = trim(g, s);
    if (s == 0) return true;
    if (k == 0 || greedy_packing(g, s) > k) return false;
    for (Vertex v : shortest_cycle(g, s)) {
        if (hit_all_cycles(g, s & ~bit(v), k - 1, removed)) {
            removed |= bit(v);
            return true;
        }
    }
    return false;
}

}  // namespace

MaisResult mais(const Digraph& g, int cap) {
    if (g.n() > cap) throw CapExceeded("mais", g.n(), cap);
    const std::uint64_t all = g.vertices().mask();
    for (int k = greedy_packing(g, all);; ++k) {
        std::uint64_t removed = 0;
        if (hit_all_cycles(g, all, k, removed)) {
            MaisResult r{g.n() - std::popcount(removed), VertexSet::from_mask(all & ~removed)};
            if (!is_acyclic_within(g, r.witness)) throw InvariantViolation("mais witness is not acyclic");
            return r;
        }
    }
}

const char* to_string(OptimalityCertificate::Kind k) {
    switch (k) {
        case OptimalityCertificate::Kind::Case1: return "case1";
        case OptimalityCertificate::Kind::Case2: return "case2";
        case OptimalityCertificate::Kind::None: return "none";
    }
    return "unknown";
}

bool verify_certificate(const ICStructure& ic, const OptimalityCertificate& cert) {
    if (cert.kind == OptimalityCertificate::Kind::None) return false;
    if (cert.removed.size() != ic.k() - 1 || !cert.removed.is_subset_of(ic.support())) return false;
    return is_acyclic_within(ic.graph(), ic.support() - cert.removed);
}

OptimalityCertificate certify_optimal(const ICStructure& ic, std::uint64_t budget_steps) {
    const Digraph& h = ic.graph();
    OptimalityCertificate cert;
    if (is_acyclic_within(h, ic.non_inner())) {
        cert.kind = OptimalityCertificate::Kind::Case1;
        cert.removed = ic.inner() - VertexSet{ic.inner().front()};
        if (!verify_certificate(ic, cert)) throw InvariantViolation("case-1 certificate does not verify");
        return cert;
    }

    // Case 2: M disjoint non-inner cycles and M + 1 groups of inner vertices,
    // each group the inner set of a case-1 sub-structure avoiding the cycles.
    Budget budget(budget_steps);
    const auto cycles = enumerate_chordless_cycles(h, ic.non_inner());
    const auto inner = ic.inner().members();
    std::vector<Path> picked;
    std::vector<VertexSet> groups;
    bool done = false;

    auto group_ok = [&](VertexSet grp, std::uint64_t avoid) {
        if (grp.size() == 1) return true;
        auto sub = search_ic_subdigraph(h, ic.support() - VertexSet::from_mask(avoid), grp, false, budget);
        return sub && is_acyclic_within(sub->graph(), sub->non_inner());
    };

    // Assigns inner vertices to exactly `m + 1` groups (set partitions in
    // canonical order), checking each finished grouping.
    auto partitions = [&](auto&& self, std::size_t idx, std::uint64_t avoid, std::size_t m) -> void {
        if (done || budget.exhausted()) return;
        if (idx == inner.size()) {
            if (groups.size() != m + 1) return;
            for (auto grp : groups)
                if (!group_ok(grp, avoid)) return;
            OptimalityCertificate c;
            c.kind = OptimalityCertificate::Kind::Case2;
            c.cycles = picked;
            c.groups = groups;
            for (const auto& cyc : picked) c.removed.insert(cyc.vertices.front());
            for (auto grp : groups) c.removed = c.removed | (grp - VertexSet{grp.front()});
            if (verify_certificate(ic, c)) {
                cert = std::move(c);
                done = true;
            }
            return;
        }
        if (!budget.consume()) return;
        const Vertex v = inner[idx];
        for (auto& grp : groups) {
            grp.insert(v);
            self(self, idx + 1, avoid, m);
            grp.erase(v);
            if (done) return;
        }
        if (groups.size() < m + 1) {
            groups.push_back(VertexSet{v});
            self(self, idx + 1, avoid, m);
            groups.pop_back();
        }
    };

    auto packings = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (done || budget.exhausted()) return;
        if (!picked.empty() && picked.size() + 1 <= inner.size()) {
            groups.clear();
            partitions(partitions, 0, used, picked.size());
        }
        for (std::size_t k = from; k < cycles.size() && !done; ++k) {
            const std::uint64_t c = cycles[k].vertex_set().mask();
            if (c & used) continue;
            picked.push_back(cycles[k]);
            self(self, k + 1, used | c);
            picked.pop_back();
        }
    };
    packings(packings, 0, 0);
    return cert;
}

std::optional<FigureOfEight> find_figure_of_eight(const Digraph& g, std::uint64_t budget_steps) {
    Budget budget(budget_steps);
    const auto cycles = enumerate_simple_cycles(g, std::max(2, g.n()), budget);
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        const std::uint64_t ca = cycles[a].vertex_set().mask();
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            const std::uint64_t shared = ca & cycles[b].vertex_set().mask();
            if (std::popcount(shared) == 1) return FigureOfEight{cycles[a], cycles[b], lowest(shared)};
        }
    }
    return std::nullopt;
}

std::optional<ICStructure> three_ic_from_figure_eight(const Digraph& g, const FigureOfEight& f8,
                                                      std::uint64_t budget_steps) {
    const Vertex u = f8.shared;
    auto predecessor = [&](const Path& c) {
        const auto& vs = c.vertices;
        for (std::size_t k = 1; k < vs.size(); ++k)
            if (vs[k] == u) return vs[k - 1];
        throw InvalidArgument("figure-of-eight cycle misses the shared vertex");
    };
    const VertexSet a = f8.first.vertex_set() - VertexSet{u};
    const VertexSet b = f8.second.vertex_set() - VertexSet{u};
    if ((a & b) != VertexSet{} || !f8.first.vertex_set().contains(u) || !f8.second.vertex_set().contains(u)) {
        throw InvalidArgument("not a figure-of-eight");
    }

    std::vector<std::pair<Vertex, Vertex>> order{{predecessor(f8.first), predecessor(f8.second)}};
    for (Vertex v : a.members())
        for (Vertex w : b.members())
            if (std::pair{v, w} != order.front()) order.emplace_back(v, w);

    Budget budget(budget_steps);
    for (auto [v, w] : order) {
        auto ic = search_ic_subdigraph(g, g.vertices(), VertexSet{u, v, w}, false, budget);
        if (ic) return ic;
        if (budget.exhausted()) break;
    }
    return std::nullopt;
}

bool minimal_partial_clique_check(const Digraph& g, int cap) {
    if (g.n() > cap) throw CapExceeded("minimal partial clique", g.n(), cap);
    const int n = g.n();
    if (n <= 1) return true;
    const std::size_t size = std::size_t{1} << n;
    std::vector<int> delta(size, 0);
    for (std::uint64_t s = 1; s < size; ++s) {
        int d = std::numeric_limits<int>::max();
        for_each_bit(s, [&](Vertex v) { d = std::min(d, std::popcount(g.out_mask(v) & s)); });
        delta[s] = d;
    }
    // best[s]: largest summed min out-degree over all partitions of s.
    std::vector<int> best(size, 0);
    for (std::uint64_t s = 1; s < size; ++s) {
        const std::uint64_t low = s & (~s + 1);
        const std::uint64_t rest = s & ~low;
        for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint64_t blk = sub | low;
            best[s] = std::max(best[s], delta[blk] + best[s & ~blk]);
            if (sub == 0) break;
        }
    }
    const std::uint64_t full = size - 1;
    const std::uint64_t low = 1;
    int split = std::numeric_limits<int>::min();
    for (std::uint64_t sub = full & ~low;; sub = (sub - 1) & (full & ~low)) {
        const std::uint64_t blk = sub | low;
        if (blk != full) split = std::max(split, delta[blk] + best[full & ~blk]);
        if (sub == 0) break;
    }
    return delta[full] > split;
}

}  // namespace icc

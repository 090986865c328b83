#include "icc/ic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bits.hpp"
#include "ic_internal.hpp"
#include "icc/error.hpp"

namespace icc {

using detail::bit;
using detail::for_each_bit;

namespace detail {

OutMasks out_masks(const Digraph& g, std::uint64_t within) {
    OutMasks out{};
    for_each_bit(within & g.vertices().mask(), [&](Vertex v) { out[v - 1] = g.out_mask(v) & within; });
    return out;
}

std::vector<Path> i_paths(const OutMasks& out, std::uint64_t allowed, std::uint64_t inner, Vertex from,
                          Vertex to, std::size_t limit, Budget& budget) {
    std::vector<Path> found;
    std::vector<Vertex> stack{from};
    auto dfs = [&](auto&& self, Vertex v, std::uint64_t on_path) -> void {
        std::uint64_t succ = out[v - 1] & allowed;
        while (succ != 0 && found.size() < limit) {
            Vertex w = lowest(succ);
            succ &= succ - 1;
            if (!budget.consume()) return;
            if (w == to) {
                Path p{stack};
                p.vertices.push_back(w);
                found.push_back(std::move(p));
            } else if (!(inner & bit(w)) && !(on_path & bit(w))) {
                stack.push_back(w);
                self(self, w, on_path | bit(w));
                stack.pop_back();
            }
        }
    };
    dfs(dfs, from, bit(from));
    return found;
}

}  // namespace detail

const char* to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::ICycle: return "i-cycle";
        case Violation::Kind::MissingIPath: return "missing-i-path";
        case Violation::Kind::DuplicateIPath: return "duplicate-i-path";
        case Violation::Kind::UncoveredVertex: return "uncovered-vertex";
        case Violation::Kind::UncoveredArc: return "uncovered-arc";
    }
    return "unknown";
}

std::string Violation::describe() const { return std::string(to_string(kind)) + " " + witness.to_string(); }

std::vector<Path> enumerate_i_paths(const Digraph& g, VertexSet inner, Vertex i, Vertex j) {
    if (!inner.contains(i) || !inner.contains(j)) throw InvalidArgument("i-path endpoints must be inner vertices");
    if (!inner.is_subset_of(g.vertices())) throw InvalidArgument("inner set outside the digraph");
    Budget unlimited;
    std::uint64_t all = g.vertices().mask();
    return detail::i_paths(detail::out_masks(g, all), all, inner.mask(), i, j, SIZE_MAX, unlimited);
}

Validation validate_ic(const Digraph& g, VertexSet inner) { return validate_ic(g, inner, g.vertices()); }

Validation validate_ic(const Digraph& g, VertexSet inner, VertexSet support) {
    if (inner.empty()) throw InvalidArgument("inner set is empty");
    if (!support.is_subset_of(g.vertices())) throw InvalidArgument("support outside the digraph");
    if (!inner.is_subset_of(support)) throw InvalidArgument("inner set outside the support");

    const std::uint64_t s = support.mask();
    const auto out = detail::out_masks(g, s);
    Budget unlimited;

    for (Vertex i : inner.members()) {
        auto cyc = detail::i_paths(out, s, inner.mask(), i, i, 1, unlimited);
        if (!cyc.empty()) return Violation{Violation::Kind::ICycle, cyc.front()};
    }

    std::uint64_t covered_v = inner.mask();
    std::vector<std::uint64_t> covered_arcs(static_cast<std::size_t>(g.n()), 0);
    for (Vertex i : inner.members()) {
        for (Vertex j : inner.members()) {
            if (i == j) continue;
            auto ps = detail::i_paths(out, s, inner.mask(), i, j, 2, unlimited);
            if (ps.empty()) return Violation{Violation::Kind::MissingIPath, Path{{i, j}}};
            if (ps.size() > 1) return Violation{Violation::Kind::DuplicateIPath, ps[1]};
            const auto& vs = ps.front().vertices;
            for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
                covered_v |= bit(vs[k + 1]);
                covered_arcs[static_cast<std::size_t>(vs[k] - 1)] |= bit(vs[k + 1]);
            }
        }
    }

    if (std::uint64_t miss = s & ~covered_v) {
        return Violation{Violation::Kind::UncoveredVertex, Path{{detail::lowest(miss)}}};
    }
    std::vector<Arc> arcs;
    for (Vertex u : support.members()) {
        if (std::uint64_t miss = out[u - 1] & ~covered_arcs[static_cast<std::size_t>(u - 1)]) {
            return Violation{Violation::Kind::UncoveredArc, Path{{u, detail::lowest(miss)}}};
        }
        for_each_bit(out[u - 1], [&](Vertex v) { arcs.push_back({u, v}); });
    }
    return ICStructureAccess::make(Digraph(g.n(), arcs), support, inner);
}

// ---------------------------------------------------------------- trees

std::optional<Vertex> RootedTree::parent(Vertex v) const {
    auto it = parent_.find(v);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
}

VertexSet RootedTree::children(Vertex v) const {
    VertexSet c;
    for (auto [child, par] : parent_)
        if (par == v) c.insert(child);
    return c;
}

std::vector<Arc> RootedTree::arcs() const {
    std::vector<Arc> a;
    for (auto [child, par] : parent_) a.push_back({par, child});
    std::sort(a.begin(), a.end());
    return a;
}

RootedTree extract_tree(const ICStructure& ic, Vertex i) {
    if (!ic.inner().contains(i)) throw InvalidArgument("tree root must be an inner vertex");
    RootedTree t;
    t.root_ = i;
    t.vertices_.insert(i);
    for (Vertex j : ic.inner().members()) {
        if (j == i) continue;
        auto ps = enumerate_i_paths(ic.graph(), ic.inner(), i, j);
        if (ps.size() != 1) throw InvariantViolation("structure does not have a unique i-path");
        const auto& vs = ps.front().vertices;
        for (std::size_t k = 1; k < vs.size(); ++k) {
            auto [it, fresh] = t.parent_.emplace(vs[k], vs[k - 1]);
            if (!fresh && it->second != vs[k - 1]) {
                throw InvariantViolation("i-paths from " + std::to_string(i) + " do not form a tree");
            }
            t.vertices_.insert(vs[k]);
        }
        t.leaves_.insert(j);
    }
    if (t.parent_.count(i) != 0) throw InvariantViolation("tree root has a parent");
    return t;
}

// ---------------------------------------------------------- super-vertices

bool is_super_vertex(const Digraph& g, VertexSet s) {
    if (s.size() < 2 || !s.is_subset_of(g.vertices()) || !is_clique(g, s)) return false;
    Vertex first = s.front();
    std::uint64_t out = g.out_mask(first) & ~s.mask();
    std::uint64_t in = g.in_mask(first) & ~s.mask();
    for (Vertex v : s.members()) {
        if ((g.out_mask(v) & ~s.mask()) != out || (g.in_mask(v) & ~s.mask()) != in) return false;
    }
    return true;
}

std::vector<SuperVertex> find_super_vertices(const Digraph& g) {
    // Members of a super-vertex are exactly the vertices with the same closed
    // out- and in-neighbourhood.
    std::map<std::pair<std::uint64_t, std::uint64_t>, VertexSet> classes;
    for (Vertex v = 1; v <= g.n(); ++v) {
        classes[{g.out_mask(v) | bit(v), g.in_mask(v) | bit(v)}].insert(v);
    }
    std::vector<SuperVertex> out;
    for (auto& [key, members] : classes)
        if (members.size() >= 2) out.push_back({members});
    std::sort(out.begin(), out.end(),
              [](const SuperVertex& a, const SuperVertex& b) { return a.members.front() < b.members.front(); });
    return out;
}

VertexSet CollapsedDigraph::expand(VertexSet quotient_vertices) const {
    VertexSet r;
    for (Vertex q : quotient_vertices.members()) r = r | members.at(static_cast<std::size_t>(q - 1));
    return r;
}

CollapsedDigraph collapse_super_vertices(const Digraph& g, const std::vector<SuperVertex>& svs) {
    std::uint64_t used = 0;
    for (const auto& sv : svs) {
        if (sv.members.mask() & used) throw InvalidArgument("overlapping super-vertices");
        if (!is_super_vertex(g, sv.members)) {
            throw InvalidArgument("not a super-vertex: " + sv.members.to_string());
        }
        used |= sv.members.mask();
    }

    std::vector<VertexSet> groups;
    for (const auto& sv : svs) groups.push_back(sv.members);
    for_each_bit(g.vertices().mask() & ~used, [&](Vertex v) { groups.push_back(VertexSet{v}); });
    std::sort(groups.begin(), groups.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });

    const int q = static_cast<int>(groups.size());
    std::vector<int> label(static_cast<std::size_t>(g.n()) + 1, 0);
    CollapsedDigraph c;
    for (int k = 0; k < q; ++k) {
        for (Vertex v : groups[static_cast<std::size_t>(k)].members()) label[static_cast<std::size_t>(v)] = k + 1;
        if (groups[static_cast<std::size_t>(k)].size() > 1) c.collapsed.insert(k + 1);
    }
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs()) {
        Arc qa{label[static_cast<std::size_t>(a.from)], label[static_cast<std::size_t>(a.to)]};
        if (qa.from != qa.to) arcs.push_back(qa);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    c.graph = Digraph(q, arcs);
    c.members = std::move(groups);
    return c;
}

}  // namespace icc

#include "icc/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "bits.hpp"
#include "icc/error.hpp"

namespace icc {

using detail::bit;
using detail::for_each_bit;
using detail::lowest;

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
}

VertexSet::VertexSet(std::span<const Vertex> vs) {
    for (Vertex v : vs) insert(v);
}

VertexSet VertexSet::range(int n) {
    if (n < 0 || n > kMaxVertices) throw InvalidArgument("vertex count out of range: " + std::to_string(n));
    return from_mask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

bool VertexSet::contains(Vertex v) const noexcept {
    return v >= 1 && v <= kMaxVertices && (mask_ & bit(v)) != 0;
}

void VertexSet::insert(Vertex v) {
    if (v < 1 || v > kMaxVertices) throw InvalidArgument("vertex label out of range: " + std::to_string(v));
    mask_ |= bit(v);
}

void VertexSet::erase(Vertex v) noexcept {
    if (v >= 1 && v <= kMaxVertices) mask_ &= ~bit(v);
}

Vertex VertexSet::front() const {
    if (mask_ == 0) throw InvalidArgument("front() of empty vertex set");
    return lowest(mask_);
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_bit(mask_, [&](Vertex v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_bit(mask_, [&](Vertex v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (x != 0 && y != 0) {
        Vertex u = lowest(x), v = lowest(y);
        if (u != v) return u < v;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

// --------------------------------------------------------------------- Path

VertexSet Path::vertex_set() const {
    VertexSet s;
    for (Vertex v : vertices) s.insert(v);
    return s;
}

std::string Path::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ',';
        os << vertices[i];
    }
    os << '>';
    return os.str();
}

// ------------------------------------------------------------------ Digraph

Digraph::Digraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw InvalidArgument("vertex count must be in 0.." + std::to_string(kMaxVertices) + ", got " +
                              std::to_string(n));
    }
    out_.assign(static_cast<std::size_t>(n), 0);
    in_.assign(static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) {
        check_vertex(a.from);
        check_vertex(a.to);
        if (a.from == a.to) throw InvalidArgument("self-loop at vertex " + std::to_string(a.from));
        auto& row = out_[static_cast<std::size_t>(a.from - 1)];
        if (row & bit(a.to)) {
            throw InvalidArgument("duplicate arc " + std::to_string(a.from) + "->" + std::to_string(a.to));
        }
        row |= bit(a.to);
        in_[static_cast<std::size_t>(a.to - 1)] |= bit(a.from);
    }
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

void Digraph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (out_mask(u) & bit(v)) != 0;
}

VertexSet Digraph::out_neighbors(Vertex v) const {
    check_vertex(v);
    return VertexSet::from_mask(out_mask(v));
}

VertexSet Digraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    return VertexSet::from_mask(in_mask(v));
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    for (Vertex u = 1; u <= n_; ++u) {
        for_each_bit(out_mask(u), [&](Vertex v) { out.push_back({u, v}); });
    }
    return out;
}

int Digraph::arc_count() const {
    int c = 0;
    for (auto m : out_) c += std::popcount(m);
    return c;
}

VertexSet InducedSubdigraph::to_original(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local.members()) out.insert(to_original(v));
    return out;
}

// --------------------------------------------------------------- operations

VertexSet out_neighbors(const Digraph& g, Vertex v) { return g.out_neighbors(v); }

InducedSubdigraph induced_subdigraph(const Digraph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) {
        throw InvalidArgument("subset " + s.to_string() + " not within 1.." + std::to_string(g.n()));
    }
    InducedSubdigraph out;
    out.original = s.members();
    std::vector<Vertex> local(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::size_t i = 0; i < out.original.size(); ++i) local[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i + 1);
    std::vector<Arc> arcs;
    for (Vertex u : out.original) {
        for_each_bit(g.out_mask(u) & s.mask(), [&](Vertex v) {
            arcs.push_back({local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]});
        });
    }
    out.graph = Digraph(static_cast<int>(out.original.size()), arcs);
    return out;
}

Digraph complement(const Digraph& g) {
    std::vector<Arc> arcs;
    for (Vertex u = 1; u <= g.n(); ++u) {
        for (Vertex v = 1; v <= g.n(); ++v) {
            if (u != v && !g.has_arc(u, v)) arcs.push_back({u, v});
        }
    }
    return Digraph(g.n(), arcs);
}

int min_out_degree(const Digraph& g) {
    if (g.n() == 0) return 0;
    int best = g.n();
    for (Vertex v = 1; v <= g.n(); ++v) best = std::min(best, std::popcount(g.out_mask(v)));
    return best;
}

bool is_acyclic_within(const Digraph& g, VertexSet within) {
    // Repeatedly strip vertices without an in-arc from the remaining set.
    std::uint64_t alive = within.mask() & g.vertices().mask();
    bool changed = true;
    while (alive != 0 && changed) {
        changed = false;
        std::uint64_t m = alive;
        while (m != 0) {
            Vertex v = lowest(m);
            m &= m - 1;
            if ((g.in_mask(v) & alive) == 0) {
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    return alive == 0;
}

bool is_acyclic(const Digraph& g) { return is_acyclic_within(g, g.vertices()); }

VertexSet reachable_within(const Digraph& g, VertexSet from, VertexSet within) {
    std::uint64_t seen = from.mask();
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](Vertex v) { next |= g.out_mask(v); });
        next &= within.mask() & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet::from_mask(seen);
}

namespace {

VertexSet co_reachable_within(const Digraph& g, VertexSet to, VertexSet within) {
    std::uint64_t seen = to.mask();
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](Vertex v) { next |= g.in_mask(v); });
        next &= within.mask() & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet::from_mask(seen);
}

}  // namespace

bool is_strongly_connected_within(const Digraph& g, VertexSet within) {
    if (within.empty()) return true;
    VertexSet root = VertexSet::from_mask(within.mask() & (~within.mask() + 1));
    return reachable_within(g, root, within) == within && co_reachable_within(g, root, within) == within;
}

std::vector<Path> enumerate_simple_cycles(const Digraph& g, int max_len, Budget& budget) {
    if (max_len < 2) throw InvalidArgument("max_len must be at least 2");
    std::vector<Path> out;
    std::vector<Vertex> stack;
    // Cycles are rooted at their smallest vertex, so the search from `root`
    // only visits larger vertices.
    auto dfs = [&](auto&& self, Vertex root, Vertex v, std::uint64_t on_path) -> void {
        if (!budget.consume()) return;
        std::uint64_t succ = g.out_mask(v);
        if ((succ & bit(root)) && stack.size() >= 2) {
            Path p{stack};
            p.vertices.push_back(root);
            out.push_back(std::move(p));
        }
        if (static_cast<int>(stack.size()) >= max_len) return;
        std::uint64_t larger = root >= 64 ? 0 : ~((std::uint64_t{1} << root) - 1);
        std::uint64_t cand = succ & larger & ~on_path;
        while (cand != 0) {
            Vertex w = lowest(cand);
            cand &= cand - 1;
            stack.push_back(w);
            self(self, root, w, on_path | bit(w));
            stack.pop_back();
            if (budget.exhausted()) return;
        }
    };
    for (Vertex r = 1; r <= g.n() && !budget.exhausted(); ++r) {
        stack.assign(1, r);
        dfs(dfs, r, r, bit(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> enumerate_simple_cycles(const Digraph& g, int max_len) {
    Budget unlimited;
    return enumerate_simple_cycles(g, max_len, unlimited);
}

std::vector<Path> enumerate_chordless_cycles(const Digraph& g, VertexSet within) {
    std::vector<Path> out;
    const std::uint64_t allowed = within.mask() & g.vertices().mask();
    std::vector<Vertex> stack;
    auto adjacent = [&](Vertex a, Vertex b) { return ((g.out_mask(a) | g.in_mask(a)) & bit(b)) != 0; };
    auto dfs = [&](auto&& self, std::uint64_t on_path) -> void {
        const Vertex root = stack.front();
        const Vertex tail = stack.back();
        const std::size_t k = stack.size();
        std::uint64_t larger = root >= 64 ? 0 : ~((std::uint64_t{1} << root) - 1);
        std::uint64_t cand = g.out_mask(tail) & allowed & larger & ~on_path;
        while (cand != 0) {
            Vertex w = lowest(cand);
            cand &= cand - 1;
            bool ok = true;
            // No arc between w and an interior path vertex.
            for (std::size_t a = 1; a + 1 < k && ok; ++a) ok = !adjacent(w, stack[a]);
            // Reverse arc w->tail is a chord unless the cycle is <root,w,root>.
            if (ok && k >= 2 && (g.out_mask(w) & bit(tail))) ok = false;
            // root->w is a chord once the path has left the root.
            if (ok && k >= 2 && (g.out_mask(root) & bit(w))) ok = false;
            if (!ok) continue;
            stack.push_back(w);
            if (g.out_mask(w) & bit(root)) {
                Path p{stack};
                p.vertices.push_back(root);
                out.push_back(std::move(p));
            } else {
                self(self, on_path | bit(w));
            }
            stack.pop_back();
        }
    };
    for_each_bit(allowed, [&](Vertex r) {
        stack.assign(1, r);
        dfs(dfs, bit(r));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_bidirectional(const Digraph& g, Vertex u, Vertex v) { return g.has_arc(u, v) && g.has_arc(v, u); }

bool has_bidirectional_arc(const Digraph& g) {
    for (Vertex u = 1; u <= g.n(); ++u) {
        if (g.out_mask(u) & g.in_mask(u)) return true;
    }
    return false;
}

bool is_clique(const Digraph& g, VertexSet s) {
    for (Vertex u : s.members()) {
        std::uint64_t others = s.mask() & ~bit(u);
        if ((g.out_mask(u) & others) != others) return false;
    }
    return true;
}

}  // namespace icc

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icc/budget.hpp"

namespace icc {

/// 1-based vertex label. Receiver i requests message x_i.
using Vertex = int;

/// Largest digraph the library represents. Vertex sets are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A set of vertex labels in 1..kMaxVertices, stored as a bitmask with bit
/// v-1 standing for vertex v.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::span<const Vertex> vs);

    static constexpr VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.mask_ = mask;
        return s;
    }
    /// {1, ..., n}
    static VertexSet range(int n);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    bool contains(Vertex v) const noexcept;

    void insert(Vertex v);
    void erase(Vertex v) noexcept;

    /// Smallest member. Precondition: non-empty.
    Vertex front() const;

    std::vector<Vertex> members() const;
    std::string to_string() const;

    constexpr bool is_subset_of(VertexSet o) const noexcept { return (mask_ & ~o.mask_) == 0; }
    constexpr bool intersects(VertexSet o) const noexcept { return (mask_ & o.mask_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.mask_ | b.mask_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.mask_ & b.mask_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_mask(a.mask_ & ~b.mask_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Lexicographic order on the sorted member lists: {1,2,5} < {1,3} < {2}.
bool lex_less(VertexSet a, VertexSet b);

struct Arc {
    Vertex from;
    Vertex to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sequence of vertices. For a cycle the first vertex is repeated at the end,
/// so <1,2,1> is the 2-cycle through 1 and 2.
struct Path {
    std::vector<Vertex> vertices;

    bool is_closed() const { return vertices.size() >= 3 && vertices.front() == vertices.back(); }
    /// Number of arcs.
    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    /// Distinct vertices (the closing repeat of a cycle is not counted twice).
    VertexSet vertex_set() const;
    std::string to_string() const;

    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Side-information digraph on vertices 1..n: arc u->v means receiver u
/// already knows x_v. No self-loops, no parallel arcs. Immutable.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    /// Throws InvalidArgument on a self-loop, a repeated arc or an endpoint
    /// outside 1..n.
    Digraph(int n, std::span<const Arc> arcs);
    Digraph(int n, std::initializer_list<Arc> arcs);

    int n() const noexcept { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool has_arc(Vertex u, Vertex v) const;
    VertexSet out_neighbors(Vertex v) const;
    VertexSet in_neighbors(Vertex v) const;
    int out_degree(Vertex v) const { return out_neighbors(v).size(); }

    /// Arcs in lexicographic order.
    std::vector<Arc> arcs() const;
    int arc_count() const;

    /// Raw adjacency mask of vertex v (bit u-1 set iff v->u). No range check.
    std::uint64_t out_mask(Vertex v) const noexcept { return out_[static_cast<std::size_t>(v - 1)]; }
    std::uint64_t in_mask(Vertex v) const noexcept { return in_[static_cast<std::size_t>(v - 1)]; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

/// Sub-digraph induced by a vertex subset, relabeled densely 1..|s|, with
/// the map back to the host labels.
struct InducedSubdigraph {
    Digraph graph;
    std::vector<Vertex> original;  // original[local - 1] = host label

    Vertex to_original(Vertex local) const { return original.at(static_cast<std::size_t>(local - 1)); }
    VertexSet to_original(VertexSet local) const;
};

VertexSet out_neighbors(const Digraph& g, Vertex v);
InducedSubdigraph induced_subdigraph(const Digraph& g, VertexSet s);
Digraph complement(const Digraph& g);
int min_out_degree(const Digraph& g);

bool is_acyclic(const Digraph& g);
/// Acyclicity of the sub-digraph induced on `within`.
bool is_acyclic_within(const Digraph& g, VertexSet within);
bool is_strongly_connected_within(const Digraph& g, VertexSet within);
/// Vertices reachable from `from` using only arcs inside `within`. `from`
/// itself is included.
VertexSet reachable_within(const Digraph& g, VertexSet from, VertexSet within);

/// Every simple directed cycle of length <= max_len, each once, rotated so
/// its smallest vertex comes first, in lexicographic order. Throws
/// InvalidArgument if max_len < 2. Stops early (returning what was found)
/// when the budget runs out.
std::vector<Path> enumerate_simple_cycles(const Digraph& g, int max_len, Budget& budget);
std::vector<Path> enumerate_simple_cycles(const Digraph& g, int max_len);

/// Chordless cycles inside `within`: cycles whose vertex set induces exactly
/// the cycle's arcs. Every vertex set that contains a cycle contains one of
/// these. Canonical rotation, lexicographic order.
std::vector<Path> enumerate_chordless_cycles(const Digraph& g, VertexSet within);

/// True iff u->v and v->u.
bool is_bidirectional(const Digraph& g, Vertex u, Vertex v);
bool has_bidirectional_arc(const Digraph& g);
/// Every pair of members joined in both directions.
bool is_clique(const Digraph& g, VertexSet s);

}  // namespace icc

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "icc/budget.hpp"
#include "icc/digraph.hpp"

namespace icc {

/// A validated interlinked-cycle structure D_K inside a host digraph.
///
/// `graph` is a sub-digraph of the host, kept in host labels (same vertex
/// count); it contains only the structure's arcs, all of them inside
/// `support`. The structure satisfies:
///   - no I-cycle (no cycle through exactly one inner vertex),
///   - exactly one I-path for every ordered pair of distinct inner vertices,
///   - every support vertex and every arc lies on some I-path.
/// Instances only come out of validate_ic() and the searches built on it.
class ICStructure {
public:
    const Digraph& graph() const noexcept { return graph_; }
    VertexSet support() const noexcept { return support_; }
    VertexSet inner() const noexcept { return inner_; }
    VertexSet non_inner() const noexcept { return support_ - inner_; }

    int k() const noexcept { return inner_.size(); }
    int n() const noexcept { return support_.size(); }
    int savings() const noexcept { return k() - 1; }
    /// Code length N - K + 1.
    int code_length() const noexcept { return n() - k() + 1; }

    /// Out-neighbours of v inside the structure.
    VertexSet out_neighbors(Vertex v) const { return graph_.out_neighbors(v) & support_; }

    friend bool operator==(const ICStructure&, const ICStructure&) = default;

private:
    friend struct ICStructureAccess;
    ICStructure(Digraph graph, VertexSet support, VertexSet inner)
        : graph_(std::move(graph)), support_(support), inner_(inner) {}

    Digraph graph_;
    VertexSet support_;
    VertexSet inner_;
};

/// Why a candidate failed validation, with a witness path.
struct Violation {
    enum class Kind { ICycle, MissingIPath, DuplicateIPath, UncoveredVertex, UncoveredArc };

    Kind kind;
    /// ICycle: the cycle; Duplicate: the second I-path found; Missing:
    /// <i,j>; UncoveredVertex: <v>; UncoveredArc: <u,v>.
    Path witness;

    std::string describe() const;
};

const char* to_string(Violation::Kind k);

using Validation = std::variant<ICStructure, Violation>;

/// Validates the whole of `g` as a candidate D_K with inner set `inner`.
Validation validate_ic(const Digraph& g, VertexSet inner);
/// Validates the part of `g` induced on `support` (arcs leaving the support
/// are ignored).
Validation validate_ic(const Digraph& g, VertexSet inner, VertexSet support);

/// All simple paths from i to j whose interior avoids `inner`. With i == j
/// these are the I-cycles at i. Throws InvalidArgument unless i, j are inner.
std::vector<Path> enumerate_i_paths(const Digraph& g, VertexSet inner, Vertex i, Vertex j);

/// Directed rooted tree T_i: root i, leaves V_I \ {i}, interior non-inner.
class RootedTree {
public:
    Vertex root() const noexcept { return root_; }
    /// Parent of v, or nullopt for the root / vertices not in the tree.
    std::optional<Vertex> parent(Vertex v) const;
    VertexSet vertices() const noexcept { return vertices_; }
    VertexSet leaves() const noexcept { return leaves_; }
    VertexSet children(Vertex v) const;
    std::vector<Arc> arcs() const;

private:
    friend RootedTree extract_tree(const ICStructure& ic, Vertex i);
    Vertex root_ = 0;
    std::map<Vertex, Vertex> parent_;
    VertexSet vertices_;
    VertexSet leaves_;
};

/// Union of the K-1 I-paths leaving inner vertex i. Throws
/// InvariantViolation if that union is not a tree.
RootedTree extract_tree(const ICStructure& ic, Vertex i);

// ------------------------------------------------------------------ search

/// Which structures a search may return.
enum class StructureKind {
    Any,
    TwoInner,  ///< K <= 2 only (cycles)
    AllInner,  ///< support == inner only (cliques)
};

struct StructureSearchOptions {
    StructureKind kind = StructureKind::Any;
    /// Vertices that may not be chosen as inner (collapsed super-vertices).
    VertexSet forbidden_inner;
    /// Exhaustive over all supports up to this many vertices; greedy above.
    int exact_cap = 12;
    /// Search steps before giving up and flagging the result incomplete.
    std::uint64_t budget = 50'000'000;
};

struct StructureSearchResult {
    /// Savings descending, then inner set and support lexicographically.
    std::vector<ICStructure> structures;
    bool complete = true;
    bool exhaustive = true;  ///< false when the greedy path ran (n > exact_cap)
};

/// Candidate IC structures of `g`, one per support vertex set (with the
/// largest, then lexicographically smallest, inner set that works on it),
/// plus every singleton as a 1-IC.
StructureSearchResult find_ic_structures(const Digraph& g, const StructureSearchOptions& opts = {});

/// Looks for a sub-digraph of g[allowed] that validates as an IC structure
/// with the given inner set: one I-path is picked per ordered inner pair and
/// the union must pass validation. With `require_cover` the union has to
/// span all of `allowed`.
std::optional<ICStructure> search_ic_subdigraph(const Digraph& g, VertexSet allowed, VertexSet inner,
                                                bool require_cover, Budget& budget);

// ----------------------------------------------------------- super-vertices

/// Clique whose members share identical out- and in-neighbourhoods outside it.
struct SuperVertex {
    VertexSet members;
    friend bool operator==(const SuperVertex&, const SuperVertex&) = default;
};

/// Maximal super-vertices (size >= 2), pairwise disjoint, ordered by
/// smallest member.
std::vector<SuperVertex> find_super_vertices(const Digraph& g);
bool is_super_vertex(const Digraph& g, VertexSet s);

/// Quotient digraph with each super-vertex merged into one vertex.
struct CollapsedDigraph {
    Digraph graph;
    /// members[q - 1] = host vertices merged into quotient vertex q.
    std::vector<VertexSet> members;
    /// Quotient vertices that stand for a merged super-vertex.
    VertexSet collapsed;

    VertexSet expand(VertexSet quotient_vertices) const;
};

/// Quotient vertices are ordered by the smallest host vertex they contain.
/// Throws InvalidArgument for overlapping or invalid super-vertices.
CollapsedDigraph collapse_super_vertices(const Digraph& g, const std::vector<SuperVertex>& svs);

}  // namespace icc

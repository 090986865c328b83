#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icc/digraph.hpp"
#include "icc/ic.hpp"
#include "icc/simplex.hpp"

namespace icc {

enum class BlockKind { Singleton, Clique, Cycle, PartialClique, IC };

const char* to_string(BlockKind k);

/// One part of a scheme's vertex partition, with the data its encoder needs.
struct Block {
    BlockKind kind = BlockKind::Singleton;
    VertexSet vertices;
    /// Symbols this block costs.
    int length = 1;
    std::optional<Path> cycle;       ///< BlockKind::Cycle
    std::optional<ICStructure> ic;   ///< BlockKind::IC
};

/// Disjoint blocks covering every vertex, ordered by smallest vertex.
struct Partition {
    std::vector<Block> blocks;

    int length() const;
    /// Disjoint, covering 1..n, and every block satisfies its kind's
    /// predicate in g with the stated length.
    bool is_valid_for(const Digraph& g) const;
};

struct SchemeResult {
    int length = 0;
    Partition partition;
    /// False when a search budget ran out and `length` is only an upper bound.
    bool exact = true;
};

/// Default cap for the 3^n subset dynamic programs.
inline constexpr int kSubsetDpCap = 15;

/// Minimum number of cliques partitioning g. Throws CapExceeded above `cap`.
SchemeResult clique_cover_number(const Digraph& g, int cap = kSubsetDpCap);

/// N minus the largest number of vertex-disjoint cycles.
SchemeResult cycle_cover_number(const Digraph& g, int cap = kSubsetDpCap);

/// Minimum over partitions of sum(|B| - min out-degree of g[B]).
SchemeResult partial_clique_number(const Digraph& g, int cap = kSubsetDpCap);

/// Largest n for which icc_length packs structures exactly (2^n table).
inline constexpr int kPackingCap = 20;

/// N - max total savings over disjoint IC structures found by
/// find_ic_structures. `exact` is false if either the structure search or
/// the packing was not exhaustive.
SchemeResult icc_length(const Digraph& g, const StructureSearchOptions& opts = {});

/// Packs disjoint candidates (sorted as find_ic_structures sorts them, and
/// including every singleton) maximizing total savings.
SchemeResult pack_structures(const Digraph& g, const std::vector<ICStructure>& candidates, bool& exact);

struct FractionalTerm {
    VertexSet support;
    Rational weight;
    int cost = 0;  ///< |S| - K + 1
};

struct FractionalSolution {
    Rational objective;
    std::vector<FractionalTerm> terms;  ///< nonzero weights only, ordered by support
    bool exact = true;
};

inline constexpr int kFractionalCap = 12;

/// LP relaxation of the ICC partition problem over all supports of g.
FractionalSolution fractional_icc(const Digraph& g, int subset_cap = kFractionalCap);

/// N - min out-degree, valid for digraphs without bidirectional arcs.
/// Throws InvalidArgument when g has a bidirectional arc.
int flcn_bidirection_free(const Digraph& g);

/// ICC after merging super-vertices (merged vertices never inner).
struct EiccResult {
    int length = 0;
    std::vector<SuperVertex> collapsed;
    CollapsedDigraph quotient;
    /// ICC solution on the quotient digraph.
    SchemeResult quotient_icc;
    bool exact = true;
};

inline constexpr int kMaxSuperVertexClasses = 10;

EiccResult eicc_length(const Digraph& g, const StructureSearchOptions& opts = {});

}  // namespace icc

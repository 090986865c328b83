#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icc/digraph.hpp"
#include "icc/ic.hpp"

namespace icc {

struct MaisResult {
    int order = 0;
    /// A largest vertex set inducing an acyclic sub-digraph.
    VertexSet witness;
};

inline constexpr int kMaisCap = 20;

/// Order of the maximum acyclic induced sub-digraph, as n minus a minimum
/// feedback vertex set. Throws CapExceeded when g.n() > cap.
MaisResult mais(const Digraph& g, int cap = kMaisCap);

struct OptimalityCertificate {
    enum class Kind { Case1, Case2, None };

    Kind kind = Kind::None;
    /// Removing these vertices leaves the structure acyclic, so its MAIS is at
    /// least N - |removed| = N - K + 1.
    VertexSet removed;
    /// Case 2: disjoint cycles among non-inner vertices.
    std::vector<Path> cycles;
    /// Case 2: the inner sets of the sub-structures grouping V_I.
    std::vector<VertexSet> groups;
};

const char* to_string(OptimalityCertificate::Kind k);

/// Case 1 when the non-inner vertices induce an acyclic sub-digraph of the
/// structure. Otherwise a budgeted search for case 2; Kind::None means "not
/// certified", not "suboptimal".
OptimalityCertificate certify_optimal(const ICStructure& ic, std::uint64_t budget = 2'000'000);

/// Checks a certificate against its structure: |removed| = K - 1, removed
/// lies in the support and the rest of the structure is acyclic.
bool verify_certificate(const ICStructure& ic, const OptimalityCertificate& cert);

struct FigureOfEight {
    Path first;
    Path second;
    Vertex shared;
};

/// Two simple cycles meeting in exactly one vertex; the first such pair in
/// the lexicographic order of enumerated cycles.
std::optional<FigureOfEight> find_figure_of_eight(const Digraph& g, std::uint64_t budget = 5'000'000);

/// A 3-IC sub-digraph with inner set {u, v, w}, u the shared vertex, v on
/// the first cycle and w on the second. Predecessors of u on the two cycles
/// are tried first.
std::optional<ICStructure> three_ic_from_figure_eight(const Digraph& g, const FigureOfEight& f8,
                                                      std::uint64_t budget = 5'000'000);

/// True iff min out-degree of g exceeds the best summed min out-degree over
/// all partitions into two or more blocks. Throws CapExceeded above `cap`.
bool minimal_partial_clique_check(const Digraph& g, int cap = 15);

}  // namespace icc

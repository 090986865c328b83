#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "icc/ic.hpp"

namespace icc {

struct ICStructureAccess {
    static ICStructure make(Digraph graph, VertexSet support, VertexSet inner) {
        return ICStructure(std::move(graph), support, inner);
    }
};

namespace detail {

using OutMasks = std::array<std::uint64_t, kMaxVertices>;

/// Simple paths from `from` to `to` in `out` restricted to `allowed`, with
/// interior outside `inner`. Stops after `limit` paths or when the budget
/// runs out. Paths come out in lexicographic order.
std::vector<Path> i_paths(const OutMasks& out, std::uint64_t allowed, std::uint64_t inner, Vertex from,
                          Vertex to, std::size_t limit, Budget& budget);

OutMasks out_masks(const Digraph& g, std::uint64_t within);

}  // namespace detail
}  // namespace icc

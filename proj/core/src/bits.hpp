#pragma once

#include <bit>
#include <cstdint>

#include "icc/digraph.hpp"

namespace icc::detail {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

constexpr Vertex lowest(std::uint64_t m) { return std::countr_zero(m) + 1; }

template <typename F>
void for_each_bit(std::uint64_t m, F&& f) {
    while (m != 0) {
        f(lowest(m));
        m &= m - 1;
    }
}

}  // namespace icc::detail

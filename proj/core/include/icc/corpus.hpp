#pragma once

#include <cstdint>
#include <string>

#include "icc/digraph.hpp"

namespace icc {

/// Five vertices, arcs 1<->2, 2<->3, 1->4, 4->3, 3->5, 5->1.
Digraph gen_fig2a();

/// Class A with K inner vertices (K even, K >= 2), N = 3K/2: vertex K+i
/// points at 2i-1 and 2i, which form a 2-clique and point at every vertex
/// of {K+1..N} except K+i.
Digraph gen_class_a(int k);

/// N even, N >= 4, K = N/2: K+i -> i, and i -> {K+1..N} \ {K+i}.
Digraph gen_example4(int n);

/// Three 2-cliques {1,2}, {3,4}, {5,6}, each joined by all arcs to the next
/// one cyclically.
Digraph gen_fig8();

/// Each ordered pair (u, v), u != v, in lexicographic order becomes an arc
/// when the next mt19937_64 output r satisfies r % den < num.
/// Requires 1 <= n <= 30 and 0 <= num <= den, den > 0.
Digraph gen_random(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

enum class Family { Fig2a, ClassA, Example4, Fig8, Random };

struct FamilySpec {
    Family family = Family::Fig2a;
    int k = 4;               ///< class_a
    int n = 6;               ///< example4, random
    std::uint64_t num = 1;   ///< random arc probability num/den
    std::uint64_t den = 2;
    std::uint64_t seed = 1;
};

/// "fig2a", "class-a", "example4", "fig8", "random". Throws InvalidArgument.
Family parse_family(const std::string& name);
const char* to_string(Family f);

Digraph generate(const FamilySpec& spec);

}  // namespace icc

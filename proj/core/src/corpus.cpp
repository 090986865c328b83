#include "icc/corpus.hpp"

#include <random>

#include "icc/error.hpp"

namespace icc {

Digraph gen_fig2a() { return Digraph(5, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 4}, {4, 3}, {3, 5}, {5, 1}}); }

Digraph gen_class_a(int k) {
    if (k < 2 || k % 2 != 0) throw InvalidArgument("class A needs an even K >= 2");
    const int n = 3 * k / 2;
    if (n > kMaxVertices) throw InvalidArgument("class A instance too large");
    std::vector<Arc> arcs;
    for (int i = 1; i <= k / 2; ++i) {
        const Vertex a = 2 * i - 1, b = 2 * i;
        arcs.push_back({k + i, a});
        arcs.push_back({k + i, b});
        arcs.push_back({a, b});
        arcs.push_back({b, a});
        for (Vertex m = k + 1; m <= n; ++m) {
            if (m == k + i) continue;
            arcs.push_back({a, m});
            arcs.push_back({b, m});
        }
    }
    return Digraph(n, arcs);
}

Digraph gen_example4(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidArgument("example4 needs an even N >= 4");
    if (n > kMaxVertices) throw InvalidArgument("example4 instance too large");
    const int k = n / 2;
    std::vector<Arc> arcs;
    for (int i = 1; i <= k; ++i) {
        arcs.push_back({k + i, i});
        for (Vertex m = k + 1; m <= n; ++m)
            if (m != k + i) arcs.push_back({i, m});
    }
    return Digraph(n, arcs);
}

Digraph gen_fig8() {
    std::vector<Arc> arcs;
    for (int c = 0; c < 3; ++c) {
        const Vertex a = 2 * c + 1, b = 2 * c + 2;
        const Vertex na = (2 * c + 2) % 6 + 1, nb = na + 1;
        arcs.push_back({a, b});
        arcs.push_back({b, a});
        for (Vertex from : {a, b})
            for (Vertex to : {na, nb}) arcs.push_back({from, to});
    }
    return Digraph(6, arcs);
}

Digraph gen_random(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    if (n < 1 || n > 30) throw InvalidArgument("random digraphs need 1 <= n <= 30");
    if (den == 0 || num > den) throw InvalidArgument("arc probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            if (u != v && rng() % den < num) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

Family parse_family(const std::string& name) {
    if (name == "fig2a") return Family::Fig2a;
    if (name == "class-a") return Family::ClassA;
    if (name == "example4") return Family::Example4;
    if (name == "fig8") return Family::Fig8;
    if (name == "random") return Family::Random;
    throw InvalidArgument("unknown family: " + name);
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Fig2a: return "fig2a";
        case Family::ClassA: return "class-a";
        case Family::Example4: return "example4";
        case Family::Fig8: return "fig8";
        case Family::Random: return "random";
    }
    return "unknown";
}

Digraph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Fig2a: return gen_fig2a();
        case Family::ClassA: return gen_class_a(spec.k);
        case Family::Example4: return gen_example4(spec.n);
        case Family::Fig8: return gen_fig8();
        case Family::Random: return gen_random(spec.n, spec.num, spec.den, spec.seed);
    }
    throw InvalidArgument("unknown family");
}

}  // namespace icc

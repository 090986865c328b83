#include "icc/schemes.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "bits.hpp"
#include "icc/error.hpp"

namespace icc {

using detail::bit;
using detail::for_each_bit;
using detail::lowest;

const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Singleton: return "singleton";
        case BlockKind::Clique: return "clique";
        case BlockKind::Cycle: return "cycle";
        case BlockKind::PartialClique: return "partial-clique";
        case BlockKind::IC: return "ic";
    }
    return "unknown";
}

namespace {

void check_cap(const Digraph& g, int cap, const char* what) {
    if (g.n() > cap) throw CapExceeded(what, g.n(), cap);
}

int min_out_degree_within(const Digraph& g, std::uint64_t s) {
    int d = std::numeric_limits<int>::max();
    for_each_bit(s, [&](Vertex v) { d = std::min(d, std::popcount(g.out_mask(v) & s)); });
    return s == 0 ? 0 : d;
}

bool is_cycle_in(const Digraph& g, const Path& c) {
    if (!c.is_closed()) return false;
    const auto& vs = c.vertices;
    if (static_cast<int>(c.vertex_set().size()) != c.length()) return false;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k)
        if (!g.has_arc(vs[k], vs[k + 1])) return false;
    return true;
}

void sort_blocks(Partition& p) {
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices.front() < b.vertices.front(); });
}

Block singleton(Vertex v) { return Block{BlockKind::Singleton, VertexSet{v}, 1, std::nullopt, std::nullopt}; }

// Minimum-cost partition of `full` into blocks with cost[B] (or infinity when
// B is not allowed). Each block is chosen to contain the lowest remaining
// vertex, giving the 3^n recurrence.
std::vector<std::uint64_t> min_partition(int n, const std::vector<int>& cost, int& total) {
    const std::size_t size = std::size_t{1} << n;
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> best(size, kInf);
    std::vector<std::uint64_t> choice(size, 0);
    best[0] = 0;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t rest = mask & ~low;
        // Submasks of rest, each joined with low.
        for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint64_t b = sub | low;
            if (cost[b] < kInf && best[mask & ~b] + cost[b] < best[mask]) {
                best[mask] = best[mask & ~b] + cost[b];
                choice[mask] = b;
            }
            if (sub == 0) break;
        }
    }
    std::vector<std::uint64_t> blocks;
    for (std::uint64_t mask = size - 1; mask != 0; mask &= ~choice[mask]) blocks.push_back(choice[mask]);
    total = best[size - 1];
    return blocks;
}

}  // namespace

int Partition::length() const {
    int l = 0;
    for (const auto& b : blocks) l += b.length;
    return l;
}

bool Partition::is_valid_for(const Digraph& g) const {
    std::uint64_t seen = 0;
    for (const auto& b : blocks) {
        if (b.vertices.empty() || (b.vertices.mask() & seen)) return false;
        seen |= b.vertices.mask();
        const int size = b.vertices.size();
        switch (b.kind) {
            case BlockKind::Singleton:
                if (size != 1 || b.length != 1) return false;
                break;
            case BlockKind::Clique:
                if (!is_clique(g, b.vertices) || b.length != 1) return false;
                break;
            case BlockKind::Cycle:
                if (!b.cycle || !is_cycle_in(g, *b.cycle) || b.cycle->vertex_set() != b.vertices ||
                    b.length != size - 1)
                    return false;
                break;
            case BlockKind::PartialClique:
                if (b.length != size - min_out_degree_within(g, b.vertices.mask())) return false;
                break;
            case BlockKind::IC: {
                if (!b.ic || b.ic->support() != b.vertices || b.length != b.ic->code_length()) return false;
                for (const Arc& a : b.ic->graph().arcs())
                    if (!g.has_arc(a.from, a.to)) return false;
                if (!std::holds_alternative<ICStructure>(validate_ic(b.ic->graph(), b.ic->inner(), b.vertices)))
                    return false;
                break;
            }
        }
    }
    return seen == g.vertices().mask();
}

SchemeResult clique_cover_number(const Digraph& g, int cap) {
    check_cap(g, cap, "clique cover");
    const int n = g.n();
    std::vector<int> cost(std::size_t{1} << n, std::numeric_limits<int>::max() / 2);
    for (std::uint64_t s = 1; s < cost.size(); ++s) {
        // s is a clique iff s minus its lowest vertex is, and that vertex is
        // joined both ways to the rest.
        const Vertex v = lowest(s);
        const std::uint64_t rest = s & ~bit(v);
        const bool joined = (g.out_mask(v) & rest) == rest && (g.in_mask(v) & rest) == rest;
        if (joined && (rest == 0 || cost[rest] == 1)) cost[s] = 1;
    }
    SchemeResult r;
    for (std::uint64_t b : min_partition(n, cost, r.length)) {
        VertexSet vs = VertexSet::from_mask(b);
        if (vs.size() == 1) {
            r.partition.blocks.push_back(singleton(vs.front()));
        } else {
            r.partition.blocks.push_back(Block{BlockKind::Clique, vs, 1, std::nullopt, std::nullopt});
        }
    }
    sort_blocks(r.partition);
    return r;
}

SchemeResult cycle_cover_number(const Digraph& g, int cap) {
    check_cap(g, cap, "cycle cover");
    const int n = g.n();
    // Every cycle contains a chordless cycle on a subset of its vertices, so
    // packing chordless cycles reaches the same maximum.
    const auto cycles = enumerate_chordless_cycles(g, g.vertices());
    std::vector<std::vector<std::size_t>> by_lowest(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        by_lowest[static_cast<std::size_t>(cycles[k].vertex_set().front())].push_back(k);
    }
    const std::size_t size = std::size_t{1} << n;
    std::vector<int> best(size, 0);
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        const Vertex v = lowest(mask);
        best[mask] = best[mask & ~bit(v)];
        for (std::size_t k : by_lowest[static_cast<std::size_t>(v)]) {
            const std::uint64_t c = cycles[k].vertex_set().mask();
            if ((c & ~mask) == 0) best[mask] = std::max(best[mask], 1 + best[mask & ~c]);
        }
    }
    SchemeResult r;
    r.length = n - best[size - 1];
    std::uint64_t mask = size - 1;
    while (mask != 0) {
        const Vertex v = lowest(mask);
        bool used = false;
        for (std::size_t k : by_lowest[static_cast<std::size_t>(v)]) {
            const std::uint64_t c = cycles[k].vertex_set().mask();
            if ((c & ~mask) == 0 && best[mask] == 1 + best[mask & ~c]) {
                const int len = std::popcount(c) - 1;
                r.partition.blocks.push_back(Block{BlockKind::Cycle, VertexSet::from_mask(c), len, cycles[k], std::nullopt});
                mask &= ~c;
                used = true;
                break;
            }
        }
        if (!used) {
            r.partition.blocks.push_back(singleton(v));
            mask &= ~bit(v);
        }
    }
    sort_blocks(r.partition);
    return r;
}

SchemeResult partial_clique_number(const Digraph& g, int cap) {
    check_cap(g, cap, "partial-clique cover");
    const int n = g.n();
    std::vector<int> cost(std::size_t{1} << n);
    for (std::uint64_t s = 1; s < cost.size(); ++s) cost[s] = std::popcount(s) - min_out_degree_within(g, s);
    SchemeResult r;
    for (std::uint64_t b : min_partition(n, cost, r.length)) {
        VertexSet vs = VertexSet::from_mask(b);
        if (vs.size() == 1) {
            r.partition.blocks.push_back(singleton(vs.front()));
        } else {
            r.partition.blocks.push_back(Block{BlockKind::PartialClique, vs, cost[b], std::nullopt, std::nullopt});
        }
    }
    sort_blocks(r.partition);
    return r;
}

SchemeResult pack_structures(const Digraph& g, const std::vector<ICStructure>& candidates, bool& exact) {
    const int n = g.n();
    SchemeResult r;
    std::vector<const ICStructure*> chosen;
    if (n <= kPackingCap) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::vector<std::size_t>> by_lowest(static_cast<std::size_t>(n) + 1);
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            by_lowest[static_cast<std::size_t>(candidates[k].support().front())].push_back(k);
        }
        std::vector<int> best(size, 0);
        for (std::uint64_t mask = 1; mask < size; ++mask) {
            const Vertex v = lowest(mask);
            best[mask] = best[mask & ~bit(v)];
            for (std::size_t k : by_lowest[static_cast<std::size_t>(v)]) {
                const std::uint64_t c = candidates[k].support().mask();
                if ((c & ~mask) == 0) best[mask] = std::max(best[mask], candidates[k].savings() + best[mask & ~c]);
            }
        }
        // Reconstruction follows the candidate order, so ties go to the
        // larger savings and then the lexicographically smaller inner set.
        std::uint64_t mask = size - 1;
        while (mask != 0) {
            const ICStructure* pick = nullptr;
            for (const auto& c : candidates) {
                const std::uint64_t s = c.support().mask();
                if ((s & ~mask) == 0 && c.savings() + best[mask & ~s] == best[mask]) {
                    pick = &c;
                    break;
                }
            }
            if (pick == nullptr) throw InvariantViolation("structure packing could not be reconstructed");
            chosen.push_back(pick);
            mask &= ~pick->support().mask();
        }
    } else {
        exact = false;
        std::uint64_t used = 0;
        for (const auto& c : candidates) {
            if (c.support().mask() & used) continue;
            chosen.push_back(&c);
            used |= c.support().mask();
        }
        for_each_bit(g.vertices().mask() & ~used, [&](Vertex v) {
            for (const auto& c : candidates)
                if (c.support() == VertexSet{v}) chosen.push_back(&c);
        });
    }
    for (const ICStructure* c : chosen) {
        if (c->k() == 1) {
            r.partition.blocks.push_back(singleton(c->support().front()));
        } else {
            r.partition.blocks.push_back(Block{BlockKind::IC, c->support(), c->code_length(), std::nullopt, *c});
        }
    }
    sort_blocks(r.partition);
    r.length = r.partition.length();
    r.exact = exact;
    return r;
}

SchemeResult icc_length(const Digraph& g, const StructureSearchOptions& opts) {
    auto found = find_ic_structures(g, opts);
    bool exact = found.complete && found.exhaustive;
    return pack_structures(g, found.structures, exact);
}

FractionalSolution fractional_icc(const Digraph& g, int subset_cap) {
    check_cap(g, subset_cap, "fractional ICC");
    const int n = g.n();
    StructureSearchOptions opts;
    opts.exact_cap = std::max(opts.exact_cap, subset_cap);
    auto found = find_ic_structures(g, opts);

    // Columns: every support with positive savings, plus singletons. A
    // support without an IC structure costs |S|, which singletons already
    // cover at the same price.
    std::vector<const ICStructure*> cols;
    for (const auto& s : found.structures) cols.push_back(&s);
    std::sort(cols.begin(), cols.end(),
              [](const ICStructure* a, const ICStructure* b) { return lex_less(a->support(), b->support()); });

    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(cols.size()));
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(1));
    std::vector<Rational> c(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        c[j] = cols[j]->code_length();
        for (Vertex v : cols[j]->support().members()) a[static_cast<std::size_t>(v - 1)][j] = 1;
    }
    FractionalSolution fs;
    fs.exact = found.complete && found.exhaustive;
    if (n == 0) return fs;
    auto lp = minimize_covering_lp(a, b, c);
    fs.objective = lp.objective;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (lp.x[j] != 0) fs.terms.push_back({cols[j]->support(), lp.x[j], cols[j]->code_length()});
    }
    return fs;
}

int flcn_bidirection_free(const Digraph& g) {
    if (has_bidirectional_arc(g)) {
        throw InvalidArgument("local-chromatic formula needs a digraph without bidirectional arcs");
    }
    return g.n() - min_out_degree(g);
}

EiccResult eicc_length(const Digraph& g, const StructureSearchOptions& opts) {
    const auto classes = find_super_vertices(g);
    if (static_cast<int>(classes.size()) > kMaxSuperVertexClasses) {
        throw CapExceeded("super-vertex classes", static_cast<int>(classes.size()), kMaxSuperVertexClasses);
    }

    std::optional<EiccResult> best;
    std::vector<VertexSet> best_inner;
    bool all_exact = true;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << classes.size()); ++pick) {
        std::vector<SuperVertex> svs;
        for (std::size_t k = 0; k < classes.size(); ++k)
            if (pick & (std::uint64_t{1} << k)) svs.push_back(classes[k]);
        EiccResult cand;
        cand.collapsed = svs;
        cand.quotient = collapse_super_vertices(g, svs);
        StructureSearchOptions o = opts;
        o.forbidden_inner = cand.quotient.collapsed;
        cand.quotient_icc = icc_length(cand.quotient.graph, o);
        cand.length = cand.quotient_icc.length;
        all_exact = all_exact && cand.quotient_icc.exact;

        std::vector<VertexSet> inner;
        for (const auto& blk : cand.quotient_icc.partition.blocks)
            if (blk.ic) inner.push_back(cand.quotient.expand(blk.ic->inner()));
        std::sort(inner.begin(), inner.end(), lex_less);

        bool better = !best || cand.length < best->length;
        if (best && cand.length == best->length) {
            if (std::lexicographical_compare(inner.begin(), inner.end(), best_inner.begin(), best_inner.end(), lex_less)) {
                better = true;
            } else if (inner == best_inner && svs.size() < best->collapsed.size()) {
                better = true;
            }
        }
        if (better) {
            best = std::move(cand);
            best_inner = std::move(inner);
        }
    }
    best->exact = all_exact;
    return *best;
}

}  // namespace icc

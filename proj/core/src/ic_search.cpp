#include <algorithm>
#include <numeric>

#include "bits.hpp"
#include "ic_internal.hpp"
#include "icc/error.hpp"
#include "icc/ic.hpp"

namespace icc {

using detail::bit;
using detail::for_each_bit;
using detail::lowest;
using detail::OutMasks;

namespace {

// Per-pair cap on enumerated I-path choices. A pair above the cap makes the
// search for that inner set inconclusive.
constexpr std::size_t kMaxChoicesPerPair = 4096;

std::uint64_t closure(const OutMasks& out, std::uint64_t start, std::uint64_t within) {
    std::uint64_t seen = start & within;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](Vertex v) { next |= out[v - 1]; });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

// Necessary conditions on g[s] for some sub-digraph to be an IC structure
// with this inner set. Cheap bitmask reachability only.
bool passes_prefilter(const OutMasks& out, const OutMasks& in, std::uint64_t s, std::uint64_t inner) {
    const std::uint64_t rest = s & ~inner;
    std::uint64_t from_inner = 0, to_inner = 0;
    for_each_bit(inner, [&](Vertex i) {
        from_inner |= out[i - 1];
        to_inner |= in[i - 1];
    });
    if ((rest & ~closure(out, from_inner, rest)) != 0) return false;
    if ((rest & ~closure(in, to_inner, rest)) != 0) return false;
    bool ok = true;
    for_each_bit(inner, [&](Vertex i) {
        if (!ok) return;
        std::uint64_t mid = closure(out, out[i - 1], rest);
        std::uint64_t hit = out[i - 1];
        for_each_bit(mid, [&](Vertex v) { hit |= out[v - 1]; });
        if ((inner & ~bit(i) & ~hit) != 0) ok = false;
    });
    return ok;
}

// False iff h holds an I-cycle or two I-paths for some ordered inner pair.
// Both are monotone under adding arcs, so they prune the path-choice search.
bool monotone_ok(const OutMasks& h, std::uint64_t inner, Budget& budget) {
    bool ok = true;
    for_each_bit(inner, [&](Vertex i) {
        if (!ok) return;
        std::uint64_t seen_targets = 0;
        auto dfs = [&](auto&& self, Vertex v, std::uint64_t on_path) -> void {
            std::uint64_t succ = h[v - 1];
            while (succ != 0 && ok) {
                Vertex w = lowest(succ);
                succ &= succ - 1;
                if (!budget.consume()) {
                    ok = false;
                    return;
                }
                if (inner & bit(w)) {
                    if (w == i || (seen_targets & bit(w))) {
                        ok = false;
                        return;
                    }
                    seen_targets |= bit(w);
                } else if (!(on_path & bit(w))) {
                    self(self, w, on_path | bit(w));
                }
            }
        };
        dfs(dfs, i, bit(i));
    });
    return ok;
}

struct PairChoices {
    Vertex from;
    Vertex to;
    std::vector<std::vector<Arc>> paths;
};

std::uint64_t vertices_of(const OutMasks& h, std::uint64_t inner) {
    std::uint64_t vs = inner;
    for (int v = 1; v <= kMaxVertices; ++v) {
        if (h[static_cast<std::size_t>(v - 1)] != 0) vs |= bit(v) | h[static_cast<std::size_t>(v - 1)];
    }
    return vs;
}

// Outcome of searching one inner set: found, ruled out, or cut short.
enum class Outcome { Found, None, Inconclusive };

Outcome search_choices(const Digraph& g, std::uint64_t allowed, std::uint64_t inner, bool require_cover,
                       Budget& budget, std::optional<ICStructure>& result) {
    const auto out = detail::out_masks(g, allowed);
    std::vector<PairChoices> pairs;
    bool truncated = false;
    for_each_bit(inner, [&](Vertex i) {
        for_each_bit(inner & ~bit(i), [&](Vertex j) {
            auto ps = detail::i_paths(out, allowed, inner, i, j, kMaxChoicesPerPair + 1, budget);
            if (ps.size() > kMaxChoicesPerPair) truncated = true;
            PairChoices pc{i, j, {}};
            for (const auto& p : ps) {
                std::vector<Arc> arcs;
                for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) arcs.push_back({p.vertices[k], p.vertices[k + 1]});
                pc.paths.push_back(std::move(arcs));
            }
            pairs.push_back(std::move(pc));
        });
    });
    if (budget.exhausted() || truncated) return Outcome::Inconclusive;
    for (const auto& pc : pairs)
        if (pc.paths.empty()) return Outcome::None;
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const PairChoices& a, const PairChoices& b) { return a.paths.size() < b.paths.size(); });

    OutMasks h{};
    bool found = false;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found || budget.exhausted()) return;
        if (k == pairs.size()) {
            std::uint64_t vs = vertices_of(h, inner);
            if (require_cover && vs != allowed) return;
            std::vector<Arc> arcs;
            for_each_bit(vs, [&](Vertex u) { for_each_bit(h[u - 1], [&](Vertex v) { arcs.push_back({u, v}); }); });
            Digraph hg(g.n(), arcs);
            auto v = validate_ic(hg, VertexSet::from_mask(inner), VertexSet::from_mask(vs));
            if (auto* ic = std::get_if<ICStructure>(&v)) {
                result = *ic;
                found = true;
            }
            return;
        }
        for (const auto& path : pairs[k].paths) {
            OutMasks saved = h;
            for (const Arc& a : path) h[static_cast<std::size_t>(a.from - 1)] |= bit(a.to);
            if (monotone_ok(h, inner, budget)) self(self, k + 1);
            h = saved;
            if (found || budget.exhausted()) return;
        }
    };
    rec(rec, 0);
    if (found) return Outcome::Found;
    return budget.exhausted() ? Outcome::Inconclusive : Outcome::None;
}

// Subsets of `pool` with exactly k members, in lexicographic order of their
// sorted member lists.
template <typename F>
bool for_each_k_subset(const std::vector<Vertex>& pool, int k, F&& f) {
    const int m = static_cast<int>(pool.size());
    if (k > m || k <= 0) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        for (int x : idx) mask |= bit(pool[static_cast<std::size_t>(x)]);
        if (!f(mask)) return false;
        int p = k - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == m - k + p) --p;
        if (p < 0) return true;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
}

class SupportSearch {
public:
    SupportSearch(const Digraph& g, const StructureSearchOptions& opts, Budget& budget)
        : g_(g), opts_(opts), budget_(budget) {
        out_ = detail::out_masks(g, g.vertices().mask());
        for (Vertex v = 1; v <= g.n(); ++v) in_[static_cast<std::size_t>(v - 1)] = g.in_mask(v);
    }

    bool incomplete() const { return incomplete_; }

    // Largest, then lexicographically first, inner set that works on s.
    std::optional<ICStructure> best_on(std::uint64_t s) {
        std::vector<Vertex> pool;
        for_each_bit(s & ~opts_.forbidden_inner.mask(), [&](Vertex v) { pool.push_back(v); });
        const int size = std::popcount(s);
        int hi = static_cast<int>(pool.size());
        int lo = 2;
        if (opts_.kind == StructureKind::TwoInner) hi = std::min(hi, 2);
        if (opts_.kind == StructureKind::AllInner) {
            if (hi < size) return std::nullopt;
            lo = size;
        }
        OutMasks out_s{}, in_s{};
        for_each_bit(s, [&](Vertex v) {
            out_s[static_cast<std::size_t>(v - 1)] = out_[static_cast<std::size_t>(v - 1)] & s;
            in_s[static_cast<std::size_t>(v - 1)] = in_[static_cast<std::size_t>(v - 1)] & s;
        });
        std::optional<ICStructure> found;
        for (int k = hi; k >= lo && !found; --k) {
            for_each_k_subset(pool, k, [&](std::uint64_t inner) {
                if (!budget_.consume()) {
                    incomplete_ = true;
                    return false;
                }
                if (!passes_prefilter(out_s, in_s, s, inner)) return true;
                Outcome o = search_choices(g_, s, inner, true, budget_, found);
                if (o == Outcome::Inconclusive) incomplete_ = true;
                return o != Outcome::Found && !budget_.exhausted();
            });
            if (budget_.exhausted()) break;
        }
        return found;
    }

private:
    const Digraph& g_;
    const StructureSearchOptions& opts_;
    Budget& budget_;
    OutMasks out_{};
    OutMasks in_{};
    bool incomplete_ = false;
};

bool candidate_less(const ICStructure& a, const ICStructure& b) {
    if (a.savings() != b.savings()) return a.savings() > b.savings();
    if (a.inner() != b.inner()) return lex_less(a.inner(), b.inner());
    return lex_less(a.support(), b.support());
}

// Supports grown greedily from short cycles, for digraphs above the exact cap.
void greedy_supports(const Digraph& g, SupportSearch& search, Budget& budget,
                     std::map<std::uint64_t, ICStructure>& best) {
    constexpr int kMaxGreedySupport = 16;
    auto seeds = enumerate_simple_cycles(g, 4, budget);
    for (const Path& c : seeds) {
        std::uint64_t s = c.vertex_set().mask();
        if (best.count(s)) continue;
        auto cur = search.best_on(s);
        if (!cur) continue;
        bool grew = true;
        while (grew && std::popcount(s) < kMaxGreedySupport && !budget.exhausted()) {
            grew = false;
            for (Vertex v = 1; v <= g.n(); ++v) {
                if (s & bit(v)) continue;
                if (!(g.out_mask(v) & s) || !(g.in_mask(v) & s)) continue;
                auto next = search.best_on(s | bit(v));
                if (next && next->savings() > cur->savings()) {
                    s |= bit(v);
                    cur = std::move(next);
                    grew = true;
                    break;
                }
            }
        }
        best.emplace(s, *cur);
    }
}

}  // namespace

std::optional<ICStructure> search_ic_subdigraph(const Digraph& g, VertexSet allowed, VertexSet inner,
                                                bool require_cover, Budget& budget) {
    if (inner.size() < 2) throw InvalidArgument("sub-digraph search needs at least two inner vertices");
    if (!inner.is_subset_of(allowed) || !allowed.is_subset_of(g.vertices())) {
        throw InvalidArgument("inner set must lie inside the allowed vertices");
    }
    std::optional<ICStructure> result;
    search_choices(g, allowed.mask(), inner.mask(), require_cover, budget, result);
    return result;
}

StructureSearchResult find_ic_structures(const Digraph& g, const StructureSearchOptions& opts) {
    Budget budget(opts.budget);
    SupportSearch search(g, opts, budget);
    StructureSearchResult r;
    std::map<std::uint64_t, ICStructure> best;

    if (g.n() <= opts.exact_cap) {
        const std::uint64_t full = g.vertices().mask();
        for (std::uint64_t s = 1; s <= full && s != 0; ++s) {
            if (std::popcount(s) < 2) continue;
            if (!is_strongly_connected_within(g, VertexSet::from_mask(s))) continue;
            if (auto ic = search.best_on(s)) best.emplace(s, std::move(*ic));
            if (budget.exhausted()) break;
        }
    } else {
        r.exhaustive = false;
        greedy_supports(g, search, budget, best);
    }
    r.complete = !search.incomplete() && !budget.exhausted();

    for (auto& [s, ic] : best) r.structures.push_back(std::move(ic));
    for (Vertex v = 1; v <= g.n(); ++v) {
        r.structures.push_back(std::get<ICStructure>(validate_ic(g, VertexSet{v}, VertexSet{v})));
    }
    std::stable_sort(r.structures.begin(), r.structures.end(), candidate_less);
    return r;
}

}  // namespace icc

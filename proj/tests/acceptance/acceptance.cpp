// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "icc/icc.hpp"
#include "oracles.hpp"

using namespace icc;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        throw Failure{os.str()};
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Digraph bidirected_cycle(int n) {
    std::vector<Arc> arcs;
    for (Vertex v = 1; v <= n; ++v) {
        arcs.push_back({v, v % n + 1});
        arcs.push_back({v % n + 1, v});
    }
    return Digraph(n, arcs);
}

struct Named {
    std::string name;
    Digraph g;
};

std::vector<Named> corpus() {
    return {{"fig2a", gen_fig2a()},           {"class-a K=4", gen_class_a(4)},
            {"class-a K=6", gen_class_a(6)},   {"class-a K=8", gen_class_a(8)},
            {"example4 N=6", gen_example4(6)}, {"example4 N=8", gen_example4(8)},
            {"example4 N=10", gen_example4(10)}, {"fig8", gen_fig8()}};
}

// Seeded random digraphs with 2 <= n <= 8 and varying density.
Digraph random_small(std::uint64_t seed) {
    return gen_random(2 + static_cast<int>(seed % 7), 1 + seed % 3, 4, 1000 + seed);
}

CodedSymbol x(std::initializer_list<Vertex> vs) { return CodedSymbol::xor_of(VertexSet(vs)); }

bool all_true(const std::vector<bool>& v) {
    for (bool b : v)
        if (!b) return false;
    return true;
}

// Every digraph touched by criteria 1-7, for the dominance check.
std::vector<Named> processed;

void note(const std::string& name, const Digraph& g) { processed.push_back({name, g}); }

void fig2a_lengths() {
    const auto t0 = std::chrono::steady_clock::now();
    const Digraph g = gen_fig2a();
    note("fig2a", g);
    expect_eq(clique_cover_number(g).length, 4, "clique cover");
    expect_eq(cycle_cover_number(g).length, 4, "cycle cover");
    expect_eq(partial_clique_number(g).length, 4, "partial-clique cover");
    expect_eq(icc_length(g).length, 3, "ICC");
    expect_eq(mais(g).order, 3, "MAIS");
    expect(seconds_since(t0) < 1.0, "runtime over 1 s");
}

void example4_lengths() {
    const auto t0 = std::chrono::steady_clock::now();
    const Digraph g = gen_example4(6);
    note("example4 N=6", g);
    expect_eq(clique_cover_number(g).length, 6, "clique cover");
    expect_eq(cycle_cover_number(g).length, 5, "cycle cover");
    expect_eq(partial_clique_number(g).length, 5, "partial-clique cover");
    expect_eq(flcn_bidirection_free(g), 5, "local-chromatic formula");
    expect_eq(icc_length(g).length, 4, "ICC");
    expect_eq(mais(g).order, 4, "MAIS");
    expect(seconds_since(t0) < 1.0, "runtime over 1 s");
}

void class_a_gap() {
    for (int k : {4, 6, 8}) {
        const auto t0 = std::chrono::steady_clock::now();
        const Digraph g = gen_class_a(k);
        note("class-a", g);
        const int n = g.n();
        const int pc = partial_clique_number(g).length;
        const auto icc = icc_length(g);
        const std::string tag = "K=" + std::to_string(k) + " ";
        expect(icc.exact, tag + "ICC search not exact");
        expect_eq(pc, k, tag + "partial-clique cover");
        expect_eq(icc.length, k / 2 + 1, tag + "ICC");
        expect_eq(pc - icc.length, n / 3 - 1, tag + "gap");
        if (k == 8) expect(seconds_since(t0) < 30.0, "K=8 runtime over 30 s");
    }
}

void example4_gap() {
    for (int n : {6, 8, 10}) {
        const Digraph g = gen_example4(n);
        note("example4", g);
        const std::string tag = "N=" + std::to_string(n) + " ";
        const int flcn = flcn_bidirection_free(g);
        const auto icc = icc_length(g);
        expect(icc.exact, tag + "ICC search not exact");
        expect_eq(flcn, n - 1, tag + "local-chromatic formula");
        expect_eq(icc.length, n / 2 + 1, tag + "ICC");
        expect_eq(flcn - icc.length, (n - 4) / 2, tag + "gap");
    }
}

void eicc_vs_icc() {
    const Digraph g = gen_fig8();
    note("fig8", g);
    const auto icc = icc_length(g);
    const auto eicc = eicc_length(g);
    expect_eq(icc.length, 3, "ICC");
    expect_eq(eicc.length, 2, "EICC");
    const auto icc_syms = partition_code(g, icc.partition, "icc");
    const auto eicc_syms = eicc_code(eicc);
    expect(icc_syms.symbols == std::vector<CodedSymbol>{x({1, 2, 3, 4}), x({5, 1, 2}), x({6})},
           "ICC code " + icc_syms.to_string());
    expect(eicc_syms.symbols == std::vector<CodedSymbol>{x({1, 2, 3, 4}), x({5, 6, 1, 2})},
           "EICC code " + eicc_syms.to_string());
}

void code_validity() {
    auto check_all = [](const std::string& name, const Digraph& g) {
        std::vector<IndexCode> codes{
            partition_code(g, clique_cover_number(g).partition, "cl"),
            partition_code(g, cycle_cover_number(g).partition, "cy"),
            partition_code(g, partial_clique_number(g).partition, "pc"),
            partition_code(g, icc_length(g).partition, "icc"),
            eicc_code(eicc_length(g)),
            partial_clique_code(g, g.vertices()),
        };
        for (const auto& c : codes) expect(all_true(decodability_oracle(g, c)), name + ": " + c.scheme + " code undecodable");
    };
    for (const auto& [name, g] : corpus()) {
        note(name, g);
        check_all(name, g);
    }
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Digraph g = random_small(s);
        note("random", g);
        check_all("random seed " + std::to_string(s), g);
    }
}

void reductions() {
    StructureSearchOptions two;
    two.kind = StructureKind::TwoInner;
    StructureSearchOptions all;
    all.kind = StructureKind::AllInner;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Digraph g = random_small(s + 500);
        note("random", g);
        const std::string tag = "seed " + std::to_string(s + 500) + " ";
        expect_eq(icc_length(g, two).length, cycle_cover_number(g).length, tag + "2-IC ICC vs cycle cover");
        expect_eq(icc_length(g, all).length, clique_cover_number(g).length, tag + "all-inner ICC vs clique cover");
    }
}

void dominance() {
    expect(!processed.empty(), "no instances recorded");
    for (const auto& [name, g] : processed) {
        const int cl = clique_cover_number(g).length;
        const int cy = cycle_cover_number(g).length;
        const int pc = partial_clique_number(g).length;
        const int icc = icc_length(g).length;
        expect(icc <= std::min(cl, cy), name + ": ICC above min(CL, CY)");
        expect(pc <= std::min(cl, cy), name + ": PC above min(CL, CY)");
    }
}

void certified_case1() {
    int checked = 0;
    auto check = [&](const std::string& name, const ICStructure& ic) {
        const auto local = induced_subdigraph(ic.graph(), ic.support()).graph;
        const auto rest = induced_subdigraph(ic.graph(), ic.non_inner()).graph;
        if (!oracle::acyclic(rest, rest.vertices().members())) return;
        ++checked;
        const auto cert = certify_optimal(ic);
        expect(cert.kind == OptimalityCertificate::Kind::Case1, name + ": not certified case 1");
        expect(verify_certificate(ic, cert), name + ": certificate does not verify");
        expect_eq(icc_length(local).length, ic.code_length(), name + ": ICC");
        expect_eq(mais(local).order, ic.code_length(), name + ": MAIS");
    };
    struct Whole {
        Named inst;
        VertexSet inner;
        VertexSet support;
    };
    // fig8 carries its 4-IC on {1..5}; vertex 6 would add a second I-path.
    const std::vector<Whole> whole{
        {{"fig2a", gen_fig2a()}, {1, 2, 3}, VertexSet::range(5)},
        {{"class-a K=4", gen_class_a(4)}, VertexSet::range(4), VertexSet::range(6)},
        {{"class-a K=6", gen_class_a(6)}, VertexSet::range(6), VertexSet::range(9)},
        {{"class-a K=8", gen_class_a(8)}, VertexSet::range(8), VertexSet::range(12)},
        {{"example4 N=6", gen_example4(6)}, VertexSet::range(3), VertexSet::range(6)},
        {{"example4 N=8", gen_example4(8)}, VertexSet::range(4), VertexSet::range(8)},
        {{"example4 N=10", gen_example4(10)}, VertexSet::range(5), VertexSet::range(10)},
        {{"fig8", gen_fig8()}, {1, 2, 3, 4}, VertexSet::range(5)},
    };
    for (const auto& w : whole) {
        auto v = validate_ic(w.inst.g, w.inner, w.support);
        expect(std::holds_alternative<ICStructure>(v), w.inst.name + ": structure does not validate");
        check(w.inst.name, std::get<ICStructure>(v));
    }
    for (const auto& [name, g] : corpus()) {
        if (g.n() > 9) continue;
        for (const auto& ic : find_ic_structures(g).structures)
            if (ic.k() >= 2) check(name + " support " + ic.support().to_string(), ic);
    }
    expect(checked > 0, "nothing checked");
}

void small_k_acyclic() {
    int seen = 0;
    for (std::uint64_t s = 0; seen < 500 && s < 100000; ++s) {
        const Digraph g = gen_random(4 + static_cast<int>(s % 5), 1, 2 + s % 3, 7000 + s);
        for (const auto& ic : find_ic_structures(g).structures) {
            if (ic.k() < 2 || ic.k() > 3 || seen >= 500) continue;
            ++seen;
            const auto rest = induced_subdigraph(ic.graph(), ic.non_inner()).graph;
            expect(oracle::acyclic(rest, rest.vertices().members()),
                   "seed " + std::to_string(7000 + s) + " support " + ic.support().to_string() + ": cycle among non-inner");
            break;  // one structure per digraph keeps the sample spread out
        }
    }
    expect_eq(seen, 500, "structures sampled");
}

void fractional_dominance() {
    for (const auto& [name, g] : corpus()) {
        if (g.n() > 10) continue;
        const auto f = fractional_icc(g);
        const int icc = icc_length(g).length;
        expect(f.exact, name + ": LP not exact");
        expect(f.objective <= icc, name + ": FICC " + to_string(f.objective) + " above ICC " + std::to_string(icc));
    }
    const auto c5 = fractional_icc(bidirected_cycle(5));
    expect(c5.objective == Rational(5, 2), "bidirected 5-cycle gave " + to_string(c5.objective));
}

void mds_round_trip() {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Digraph g = gen_random(2 + static_cast<int>(s % 7), 1 + s % 3, 4, 9000 + s);
        const auto msgs = MessageBlock::random(g.n(), 1 + s % 16, s);
        const auto enc = partial_clique_encode(g, msgs);
        expect_eq(enc.code.length(), g.n() - min_out_degree(g), "seed " + std::to_string(9000 + s) + " length");
        for (Vertex v = 1; v <= g.n(); ++v) {
            expect(partial_clique_decode(g, enc.payload, v, side_info_for(g, v, msgs)) == msgs.at(v),
                   "seed " + std::to_string(9000 + s) + " receiver " + std::to_string(v));
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"fig2a lengths: CL=4 CY=4 PC=4 ICC=3 MAIS=3", fig2a_lengths},
        {"example4 K=3 lengths: CL=6 CY=5 PC=5 FLCN=5 ICC=MAIS=4", example4_lengths},
        {"class A gap for K in {4,6,8}", class_a_gap},
        {"example4 gap for N in {6,8,10}", example4_gap},
        {"EICC vs ICC codes on fig8", eicc_vs_icc},
        {"every encoder's code decodes on corpus + 200 random", code_validity},
        {"2-IC and all-inner ICC match cycle and clique covers", reductions},
        {"ICC and PC at most min(CL, CY) on all processed instances", dominance},
        {"acyclic non-inner structures certified with ICC = MAIS", certified_case1},
        {"500 random structures with K <= 3 have acyclic non-inner part", small_k_acyclic},
        {"fractional ICC at most ICC; bidirected 5-cycle = 5/2", fractional_dominance},
        {"MDS partial-clique round trip on 100 random instances", mds_round_trip},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            criteria[k].second();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%-4s criterion %2zu  %-62s %7.2fs%s%s\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    seconds_since(t0), ok ? "" : "  ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus_list.hpp"
#include "icc/codec.hpp"
#include "icc/corpus.hpp"
#include "icc/error.hpp"
#include "oracles.hpp"

using namespace icc;

namespace {

CodedSymbol x(std::initializer_list<Vertex> vs) { return CodedSymbol::xor_of(VertexSet(vs)); }

ICStructure valid(const Digraph& g, VertexSet inner) {
    auto v = validate_ic(g, inner);
    REQUIRE(std::holds_alternative<ICStructure>(v));
    return std::get<ICStructure>(v);
}

Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (Vertex v = 1; v <= n; ++v) arcs.push_back({v, v % n + 1});
    return Digraph(n, arcs);
}

Digraph complete(int n) {
    std::vector<Arc> arcs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

std::vector<IndexCode> every_code(const Digraph& g) {
    std::vector<IndexCode> codes{
        partition_code(g, clique_cover_number(g).partition, "cl"),
        partition_code(g, cycle_cover_number(g).partition, "cy"),
        partition_code(g, partial_clique_number(g).partition, "pc"),
        partition_code(g, icc_length(g).partition, "icc"),
        eicc_code(eicc_length(g)),
    };
    return codes;
}

}  // namespace

TEST_CASE("icc_encode on fig2a") {
    const auto ic = valid(gen_fig2a(), {1, 2, 3});
    const auto msgs = MessageBlock::random(5, 4, 3);
    const auto enc = icc_encode(ic, msgs);
    CHECK(enc.code.symbols == std::vector<CodedSymbol>{x({1, 2, 3}), x({4, 3}), x({5, 1})});
    CHECK(enc.code.length() == 3);
    REQUIRE(enc.payload.size() == 3);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(enc.payload[0][k] == (msgs.at(1)[k] ^ msgs.at(2)[k] ^ msgs.at(3)[k]));
        CHECK(enc.payload[1][k] == (msgs.at(4)[k] ^ msgs.at(3)[k]));
    }
}

TEST_CASE("icc code for the example-4 instance") {
    const Digraph g = gen_example4(6);
    const auto code = partition_code(g, icc_length(g).partition, "icc");
    std::vector<CodedSymbol> want{x({4, 1}), x({5, 2}), x({6, 3}), x({1, 2, 3})};
    auto got = code.symbols;
    auto key = [](const CodedSymbol& s) { return std::vector<std::pair<Vertex, std::uint8_t>>(s.coeffs.begin(), s.coeffs.end()); };
    auto by_key = [&](const CodedSymbol& a, const CodedSymbol& b) { return key(a) < key(b); };
    std::sort(got.begin(), got.end(), by_key);
    std::sort(want.begin(), want.end(), by_key);
    CHECK(got == want);
    CHECK(code.symbols.front() == x({1, 2, 3}));
}

TEST_CASE("2-cycle as a 2-IC") {
    const auto ic = valid(Digraph(2, {{1, 2}, {2, 1}}), {1, 2});
    CHECK(icc_code(ic).symbols == std::vector<CodedSymbol>{x({1, 2})});
}

TEST_CASE("icc_decode on fig2a") {
    const Digraph g = gen_fig2a();
    const auto ic = valid(g, {1, 2, 3});
    const auto msgs = MessageBlock::random(5, 8, 99);
    const auto enc = icc_encode(ic, msgs);
    CHECK(icc_inner_combination(ic, 1) == x({1, 2, 4}));
    for (Vertex v = 1; v <= 5; ++v) CHECK(icc_decode(ic, enc.payload, v, side_info_for(g, v, msgs)) == msgs.at(v));
    CHECK_THROWS_AS(icc_decode(ic, enc.payload, 1, SideInfo{}), InvalidArgument);

    const auto single = valid(Digraph(1), {1});
    const auto m1 = MessageBlock::random(1, 3, 5);
    CHECK(icc_decode(single, icc_encode(single, m1).payload, 1, {}) == m1.at(1));
}

TEST_CASE("receiver outside the structure") {
    auto r = find_ic_structures(gen_fig8());
    const auto& top = r.structures.front();
    const auto msgs = MessageBlock::random(6, 2, 1);
    Vertex outside = 0;
    for (Vertex v = 1; v <= 6; ++v)
        if (!top.support().contains(v)) outside = v;
    if (outside != 0) CHECK_THROWS_AS(icc_decode(top, icc_encode(top, msgs).payload, outside, {}), InvalidArgument);
}

TEST_CASE("inner combination cancels to the receiver plus its out-neighbours") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Digraph g = gen_random(7, 1, 3, seed);
        for (const auto& ic : find_ic_structures(g).structures) {
            CHECK(icc_code(ic).length() == ic.n() - ic.k() + 1);
            for (Vertex i : ic.inner().members()) {
                VertexSet support;
                for (auto [v, c] : icc_inner_combination(ic, i).coeffs) support.insert(v);
                CHECK(support == (ic.out_neighbors(i) | VertexSet{i}));
            }
        }
    }
}

TEST_CASE("cycle_encode") {
    const Digraph g = gen_fig2a();
    CHECK(cycle_code(g, Path{{1, 2, 1}}).symbols == std::vector<CodedSymbol>{x({1, 2})});
    CHECK(cycle_code(g, Path{{1, 4, 3, 5, 1}}).symbols == std::vector<CodedSymbol>{x({1, 4}), x({4, 3}), x({3, 5})});
    CHECK_THROWS_AS(cycle_code(g, Path{{1, 2, 3}}), InvalidArgument);
    CHECK_THROWS_AS(cycle_code(g, Path{{1, 3, 1}}), InvalidArgument);

    const Digraph c5 = directed_cycle(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto msgs = MessageBlock::random(5, 6, seed);
        const auto enc = cycle_encode(c5, Path{{1, 2, 3, 4, 5, 1}}, msgs);
        for (Vertex v = 1; v <= 5; ++v) CHECK(linear_decode(c5, enc.code, enc.payload, v, side_info_for(c5, v, msgs)) == msgs.at(v));
    }
}

TEST_CASE("clique_encode") {
    const Digraph k4 = complete(4);
    CHECK(clique_code(k4, {3}).symbols == std::vector<CodedSymbol>{x({3})});
    CHECK(clique_code(k4, {1, 2}).symbols == std::vector<CodedSymbol>{x({1, 2})});
    const auto code = clique_code(k4, {1, 2, 3, 4});
    CHECK(code.length() == 1);
    CHECK(all_true(decodability_oracle(k4, code)));
    CHECK_THROWS_AS(clique_code(gen_fig2a(), {1, 2, 3}), InvalidArgument);
}

TEST_CASE("partial_clique_encode lengths") {
    CHECK(partial_clique_code(complete(3), VertexSet::range(3)).length() == 1);
    CHECK(partial_clique_code(directed_cycle(5), VertexSet::range(5)).length() == 4);
    const Digraph ca = gen_class_a(4);
    CHECK(partial_clique_code(ca, ca.vertices()).length() == ca.n() - 2);
}

TEST_CASE("partial_clique_decode") {
    const Digraph k3 = complete(3);
    const auto m = MessageBlock::random(3, 5, 8);
    const auto enc = partial_clique_encode(k3, m);
    CHECK(partial_clique_decode(k3, enc.payload, 2, side_info_for(k3, 2, m)) == m.at(2));

    const Digraph c5 = directed_cycle(5);
    const auto m5 = MessageBlock::random(5, 3, 9);
    const auto e5 = partial_clique_encode(c5, m5);
    for (Vertex v = 1; v <= 5; ++v) CHECK(partial_clique_decode(c5, e5.payload, v, side_info_for(c5, v, m5)) == m5.at(v));
    CHECK_THROWS_AS(partial_clique_decode(c5, e5.payload, 1, SideInfo{}), InvalidArgument);
}

TEST_CASE("decodability oracle") {
    const Digraph g = gen_fig2a();
    IndexCode fig{"icc", {x({1, 2, 3}), x({4, 3}), x({5, 1})}};
    CHECK(all_true(decodability_oracle(g, fig)));

    auto none = decodability_oracle(g, IndexCode{"none", {}});
    CHECK(std::none_of(none.begin(), none.end(), [](bool b) { return b; }));

    IndexCode uncoded{"id", {}};
    for (Vertex v = 1; v <= 5; ++v) uncoded.symbols.push_back(x({v}));
    CHECK(all_true(decodability_oracle(g, uncoded)));

    CHECK_THROWS_AS(decodability_oracle(g, IndexCode{"bad", {x({6})}}), InvalidArgument);
}

TEST_CASE("binary oracle agrees with brute-force subset search") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const Digraph g = gen_random(6, 1, 2, seed);
        IndexCode code{"rand", {}};
        std::vector<oracle::Set> sets;
        const int m = 1 + static_cast<int>(rng() % 6);
        for (int s = 0; s < m; ++s) {
            VertexSet vs = VertexSet::from_mask(1 + rng() % 63);
            code.symbols.push_back(CodedSymbol::xor_of(vs));
            sets.push_back(vs.members());
        }
        CHECK(decodability_oracle(g, code) == oracle::binary_decodable(g, sets));
    }
}

TEST_CASE("GF(2^8) oracle path matches the binary path on 0/1 codes") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Digraph g = gen_random(6, 1, 2, seed);
        auto code = partition_code(g, icc_length(g).partition, "icc");
        const auto bin = decodability_oracle(g, code);
        // A dummy 1 * 1 = 1 coefficient forces the GF(2^8) path without
        // changing the span: add x1 scaled by 2 and back out via x1 alone.
        IndexCode wide = code;
        wide.symbols.push_back(CodedSymbol{{{1, 2}}});
        IndexCode narrow = code;
        narrow.symbols.push_back(x({1}));
        CHECK(decodability_oracle(g, wide) == decodability_oracle(g, narrow));
        CHECK(all_true(bin));
    }
}

TEST_CASE("eicc on fig8") {
    const Digraph g = gen_fig8();
    CHECK(eicc_code(eicc_length(g)).symbols == std::vector<CodedSymbol>{x({1, 2, 3, 4}), x({5, 6, 1, 2})});
    CHECK(partition_code(g, icc_length(g).partition, "icc").symbols ==
          std::vector<CodedSymbol>{x({1, 2, 3, 4}), x({5, 1, 2}), x({6})});
    const auto msgs = MessageBlock::random(6, 4, 2);
    const auto enc = eicc_encode(g, msgs);
    for (Vertex v = 1; v <= 6; ++v) CHECK(linear_decode(g, enc.code, enc.payload, v, side_info_for(g, v, msgs)) == msgs.at(v));
}

TEST_CASE("eicc without super-vertices equals icc") {
    const Digraph g = gen_example4(8);
    CHECK(eicc_code(eicc_length(g)).symbols == partition_code(g, icc_length(g).partition, "icc").symbols);
}

TEST_CASE("every scheme round-trips on the corpus for 100 payloads") {
    for (const auto& [name, g] : testing_corpus::instances()) {
        for (const auto& code : every_code(g)) {
            INFO(name << " " << code.scheme);
            CHECK(all_true(decodability_oracle(g, code)));
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const auto msgs = MessageBlock::random(g.n(), 1 + seed % 4, seed);
                const auto payload = evaluate(code, msgs);
                for (Vertex v = 1; v <= g.n(); ++v)
                    REQUIRE(linear_decode(g, code, payload, v, side_info_for(g, v, msgs)) == msgs.at(v));
            }
        }
    }
}

TEST_CASE("icc_decode round-trips on every IC block of the corpus") {
    for (const auto& [name, g] : testing_corpus::instances()) {
        for (const auto& b : icc_length(g).partition.blocks) {
            if (!b.ic) continue;
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const auto msgs = MessageBlock::random(g.n(), 2, seed);
                const auto enc = icc_encode(*b.ic, msgs);
                for (Vertex v : b.vertices.members())
                    REQUIRE(icc_decode(*b.ic, enc.payload, v, side_info_for(g, v, msgs)) == msgs.at(v));
            }
        }
    }
}

TEST_CASE("dropping any ICC symbol breaks some receiver") {
    for (const auto& [name, g] : testing_corpus::instances()) {
        const auto code = partition_code(g, icc_length(g).partition, "icc");
        for (int drop = 0; drop < code.length(); ++drop) {
            IndexCode cut = code;
            cut.symbols.erase(cut.symbols.begin() + drop);
            INFO(name << " without symbol " << drop);
            CHECK_FALSE(all_true(decodability_oracle(g, cut)));
        }
    }
}

TEST_CASE("message blocks") {
    CHECK_THROWS_AS(MessageBlock(std::vector<Bytes>{}), InvalidArgument);
    CHECK_THROWS_AS(MessageBlock(std::vector<Bytes>{{1, 2}, {3}}), InvalidArgument);
    CHECK_THROWS_AS(MessageBlock(std::vector<Bytes>{Bytes{}}), InvalidArgument);
    CHECK(MessageBlock::random(3, 2, 7).messages() == MessageBlock::random(3, 2, 7).messages());
    CHECK_THROWS_AS(icc_encode(valid(gen_fig2a(), {1, 2, 3}), MessageBlock::random(3, 1, 1)), InvalidArgument);
}

#include "icc/codec.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "icc/error.hpp"
#include "icc/galois.hpp"

namespace icc {

namespace {

Gf256 gf(std::uint8_t v) { return Gf256(v); }

void xor_into(Bytes& acc, const Bytes& x) {
    if (acc.size() != x.size()) throw InvalidArgument("message length mismatch");
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] ^= x[k];
}

const Bytes& known(const SideInfo& side, Vertex v) {
    auto it = side.find(v);
    if (it == side.end()) throw InvalidArgument("side information lacks x" + std::to_string(v));
    return it->second;
}

std::size_t payload_width(const Payload& p) {
    if (p.empty()) throw InvalidArgument("empty payload");
    return p.front().size();
}

void toggle(CodedSymbol& s, Vertex v) {
    if (s.coeffs.erase(v) == 0) s.coeffs[v] = 1;
}

}  // namespace

// ---------------------------------------------------------------- messages

MessageBlock::MessageBlock(std::vector<Bytes> messages) : messages_(std::move(messages)) {
    if (messages_.empty()) throw InvalidArgument("message block is empty");
    for (const auto& m : messages_) {
        if (m.empty() || m.size() != messages_.front().size()) {
            throw InvalidArgument("messages must be non-empty and of equal length");
        }
    }
}

MessageBlock MessageBlock::random(int n, std::size_t t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Bytes> ms(static_cast<std::size_t>(n), Bytes(t));
    for (auto& m : ms)
        for (auto& b : m) b = static_cast<std::uint8_t>(rng() & 0xFF);
    return MessageBlock(std::move(ms));
}

CodedSymbol CodedSymbol::xor_of(VertexSet vs) {
    CodedSymbol s;
    for (Vertex v : vs.members()) s.coeffs[v] = 1;
    return s;
}

bool IndexCode::is_binary() const {
    for (const auto& s : symbols)
        for (auto [v, c] : s.coeffs)
            if (c != 1) return false;
    return true;
}

std::string IndexCode::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        if (k) os << ", ";
        bool first = true;
        for (auto [v, c] : symbols[k].coeffs) {
            if (!first) os << '+';
            first = false;
            if (c != 1) os << static_cast<int>(c) << '*';
            os << 'x' << v;
        }
    }
    return os.str();
}

Payload evaluate(const IndexCode& code, const MessageBlock& msgs) {
    Payload p;
    for (const auto& s : code.symbols) {
        Bytes acc(msgs.t(), 0);
        for (auto [v, c] : s.coeffs) {
            if (v < 1 || v > msgs.n()) throw InvalidArgument("symbol references x" + std::to_string(v) + " outside the message block");
            const Bytes& x = msgs.at(v);
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] ^= (gf(c) * gf(x[k])).value();
        }
        p.push_back(std::move(acc));
    }
    return p;
}

EncodedCode encode(IndexCode code, const MessageBlock& msgs) {
    Payload p = evaluate(code, msgs);
    return {std::move(code), std::move(p)};
}

SideInfo side_info_for(const Digraph& g, Vertex receiver, const MessageBlock& msgs) {
    SideInfo s;
    for (Vertex v : g.out_neighbors(receiver).members()) s[v] = msgs.at(v);
    return s;
}

// ---------------------------------------------------------------- ICC

IndexCode icc_code(const ICStructure& ic) {
    IndexCode code{"icc", {CodedSymbol::xor_of(ic.inner())}};
    for (Vertex j : ic.non_inner().members()) {
        code.symbols.push_back(CodedSymbol::xor_of(ic.out_neighbors(j) | VertexSet{j}));
    }
    return code;
}

EncodedCode icc_encode(const ICStructure& ic, const MessageBlock& msgs) {
    if (ic.support().mask() >> msgs.n() != 0) throw InvalidArgument("message block does not cover the structure");
    return encode(icc_code(ic), msgs);
}

CodedSymbol icc_inner_combination(const ICStructure& ic, Vertex i) {
    const auto tree = extract_tree(ic, i);
    const auto code = icc_code(ic);
    const auto non_inner = ic.non_inner().members();
    CodedSymbol acc = code.symbols.front();
    for (std::size_t k = 0; k < non_inner.size(); ++k) {
        if (!tree.vertices().contains(non_inner[k])) continue;
        for (auto [v, c] : code.symbols[k + 1].coeffs) toggle(acc, v);
    }
    return acc;
}

Bytes icc_decode(const ICStructure& ic, const Payload& payload, Vertex receiver, const SideInfo& side_info) {
    if (!ic.support().contains(receiver)) throw InvalidArgument("receiver outside the structure");
    if (static_cast<int>(payload.size()) != ic.code_length()) throw InvalidArgument("payload length does not match the structure");
    payload_width(payload);

    CodedSymbol combo;
    Bytes acc;
    if (ic.inner().contains(receiver)) {
        combo = icc_inner_combination(ic, receiver);
        const auto tree = extract_tree(ic, receiver);
        const auto non_inner = ic.non_inner().members();
        acc = payload.front();
        for (std::size_t k = 0; k < non_inner.size(); ++k)
            if (tree.vertices().contains(non_inner[k])) xor_into(acc, payload[k + 1]);
    } else {
        const auto non_inner = ic.non_inner().members();
        auto k = static_cast<std::size_t>(std::find(non_inner.begin(), non_inner.end(), receiver) - non_inner.begin());
        combo = CodedSymbol::xor_of(ic.out_neighbors(receiver) | VertexSet{receiver});
        acc = payload[k + 1];
    }
    if (!combo.coeffs.count(receiver)) throw InvariantViolation("decoding combination lost the receiver");
    for (auto [v, c] : combo.coeffs)
        if (v != receiver) xor_into(acc, known(side_info, v));
    return acc;
}

// ------------------------------------------------------ other schemes

IndexCode cycle_code(const Digraph& g, const Path& c) {
    const auto& vs = c.vertices;
    if (!c.is_closed() || c.vertex_set().size() != c.length()) throw InvalidArgument("not a cycle: " + c.to_string());
    IndexCode code{"cy", {}};
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (!g.has_arc(vs[k], vs[k + 1])) throw InvalidArgument("cycle uses a missing arc: " + c.to_string());
    }
    for (std::size_t k = 0; k + 2 < vs.size(); ++k) code.symbols.push_back(CodedSymbol::xor_of({vs[k], vs[k + 1]}));
    return code;
}

EncodedCode cycle_encode(const Digraph& g, const Path& c, const MessageBlock& msgs) {
    return encode(cycle_code(g, c), msgs);
}

IndexCode clique_code(const Digraph& g, VertexSet s) {
    if (s.empty() || !s.is_subset_of(g.vertices()) || !is_clique(g, s)) throw InvalidArgument("not a clique: " + s.to_string());
    return IndexCode{"cl", {CodedSymbol::xor_of(s)}};
}

EncodedCode clique_encode(const Digraph& g, VertexSet s, const MessageBlock& msgs) {
    return encode(clique_code(g, s), msgs);
}

IndexCode partial_clique_code(const Digraph& g, VertexSet block) {
    if (block.empty() || !block.is_subset_of(g.vertices())) throw InvalidArgument("bad partial-clique block");
    const auto members = block.members();
    const int size = static_cast<int>(members.size());
    if (size > 255) throw CapExceeded("partial-clique block", size, 255);
    int delta = size;
    for (Vertex v : members) delta = std::min(delta, (g.out_neighbors(v) & block).size());
    const GfMatrix gen = vandermonde_mds(size - delta, size);
    IndexCode code{"pc", {}};
    for (int r = 0; r < gen.rows(); ++r) {
        CodedSymbol s;
        for (int c = 0; c < size; ++c) s.coeffs[members[static_cast<std::size_t>(c)]] = gen.at(r, c).value();
        code.symbols.push_back(std::move(s));
    }
    return code;
}

EncodedCode partial_clique_encode(const Digraph& g, const MessageBlock& msgs) {
    return encode(partial_clique_code(g, g.vertices()), msgs);
}

Bytes partial_clique_decode(const Digraph& g, const Payload& payload, Vertex receiver, const SideInfo& side_info) {
    const IndexCode code = partial_clique_code(g, g.vertices());
    if (payload.size() != code.symbols.size()) throw InvalidArgument("payload length does not match the code");
    const std::size_t t = payload_width(payload);

    std::vector<Vertex> unknown;
    for (Vertex v = 1; v <= g.n(); ++v)
        if (v == receiver || !side_info.count(v)) unknown.push_back(v);
    const int u = static_cast<int>(unknown.size());
    if (u > code.length()) throw InvalidArgument("receiver holds too little side information");

    // Rows 0..u-1 restricted to the unknown columns form a Vandermonde
    // matrix on distinct points.
    GfMatrix m(u, u);
    std::vector<Bytes> rhs;
    for (int r = 0; r < u; ++r) {
        const auto& sym = code.symbols[static_cast<std::size_t>(r)];
        Bytes row = payload[static_cast<std::size_t>(r)];
        for (auto [v, c] : sym.coeffs) {
            auto pos = std::find(unknown.begin(), unknown.end(), v);
            if (pos != unknown.end()) {
                m.at(r, static_cast<int>(pos - unknown.begin())) = gf(c);
            } else {
                const Bytes& x = known(side_info, v);
                if (x.size() != t) throw InvalidArgument("message length mismatch");
                for (std::size_t k = 0; k < t; ++k) row[k] ^= (gf(c) * gf(x[k])).value();
            }
        }
        rhs.push_back(std::move(row));
    }
    auto sol = solve_linear(m, rhs);
    auto pos = std::find(unknown.begin(), unknown.end(), receiver) - unknown.begin();
    return sol[static_cast<std::size_t>(pos)];
}

IndexCode partition_code(const Digraph& g, const Partition& p, const std::string& scheme) {
    IndexCode code{scheme, {}};
    for (const auto& b : p.blocks) {
        IndexCode part;
        switch (b.kind) {
            case BlockKind::Singleton: part.symbols = {CodedSymbol::xor_of(b.vertices)}; break;
            case BlockKind::Clique: part = clique_code(g, b.vertices); break;
            case BlockKind::Cycle: part = cycle_code(g, b.cycle.value()); break;
            case BlockKind::PartialClique: part = partial_clique_code(g, b.vertices); break;
            case BlockKind::IC: part = icc_code(b.ic.value()); break;
        }
        code.symbols.insert(code.symbols.end(), part.symbols.begin(), part.symbols.end());
    }
    return code;
}

IndexCode eicc_code(const EiccResult& r) {
    IndexCode q = partition_code(r.quotient.graph, r.quotient_icc.partition, "eicc");
    IndexCode code{"eicc", {}};
    for (const auto& s : q.symbols) {
        CodedSymbol e;
        for (auto [v, c] : s.coeffs)
            for (Vertex m : r.quotient.members.at(static_cast<std::size_t>(v - 1)).members()) e.coeffs[m] = c;
        code.symbols.push_back(std::move(e));
    }
    return code;
}

EncodedCode eicc_encode(const Digraph& g, const MessageBlock& msgs) { return encode(eicc_code(eicc_length(g)), msgs); }

Bytes linear_decode(const Digraph& g, const IndexCode& code, const Payload& payload, Vertex receiver,
                    const SideInfo& side_info) {
    if (payload.size() != code.symbols.size()) throw InvalidArgument("payload length does not match the code");
    if (receiver < 1 || receiver > g.n()) throw InvalidArgument("receiver out of range");
    const std::size_t t = payload_width(payload);
    const int n = g.n();

    // Substitute side information, then row-reduce [coeffs | payload].
    std::vector<std::vector<Gf256>> rows;
    std::vector<Bytes> aug;
    for (std::size_t s = 0; s < code.symbols.size(); ++s) {
        std::vector<Gf256> row(static_cast<std::size_t>(n));
        Bytes val = payload[s];
        for (auto [v, c] : code.symbols[s].coeffs) {
            if (v < 1 || v > n) throw InvalidArgument("symbol references a vertex outside the digraph");
            if (v != receiver && side_info.count(v)) {
                const Bytes& x = side_info.at(v);
                if (x.size() != t) throw InvalidArgument("message length mismatch");
                for (std::size_t k = 0; k < t; ++k) val[k] ^= (gf(c) * gf(x[k])).value();
            } else {
                row[static_cast<std::size_t>(v - 1)] = gf(c);
            }
        }
        rows.push_back(std::move(row));
        aug.push_back(std::move(val));
    }

    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(aug[piv], aug[rank]);
        const Gf256 inv = rows[rank][static_cast<std::size_t>(col)].inverse();
        for (auto& e : rows[rank]) e *= inv;
        for (auto& b : aug[rank]) b = (gf(b) * inv).value();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][static_cast<std::size_t>(col)].is_zero()) continue;
            const Gf256 f = rows[r][static_cast<std::size_t>(col)];
            for (int c = 0; c < n; ++c) rows[r][static_cast<std::size_t>(c)] += f * rows[rank][static_cast<std::size_t>(c)];
            for (std::size_t k = 0; k < t; ++k) aug[r][k] ^= (f * gf(aug[rank][k])).value();
        }
        ++rank;
    }
    for (std::size_t r = 0; r < rank; ++r) {
        const auto& row = rows[r];
        if (row[static_cast<std::size_t>(receiver - 1)].is_zero()) continue;
        bool unit = true;
        for (int c = 0; c < n; ++c)
            if (c != receiver - 1 && !row[static_cast<std::size_t>(c)].is_zero()) unit = false;
        if (unit) return aug[r];
    }
    throw SingularMatrix("receiver " + std::to_string(receiver) + " cannot decode");
}

// ---------------------------------------------------------------- oracle

namespace {

// GF(2): rows as bitmasks, e_i in span iff inserting it into an XOR basis
// fails.
bool binary_decodable(const std::vector<std::uint64_t>& rows, std::uint64_t known, Vertex i) {
    std::vector<std::uint64_t> basis;  // fully reduced: no element holds another's leading bit
    auto reduce = [&](std::uint64_t x) {
        for (std::uint64_t b : basis)
            if (x & (std::uint64_t{1} << (63 - std::countl_zero(b)))) x ^= b;
        return x;
    };
    for (std::uint64_t r : rows) {
        std::uint64_t x = reduce(r & ~known);
        if (x == 0) continue;
        const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(x));
        for (auto& b : basis)
            if (b & lead) b ^= x;
        basis.push_back(x);
    }
    return reduce(std::uint64_t{1} << (i - 1)) == 0;
}

}  // namespace

std::vector<bool> decodability_oracle(const Digraph& g, const IndexCode& code) {
    const int n = g.n();
    for (const auto& s : code.symbols)
        for (auto [v, c] : s.coeffs)
            if (v < 1 || v > n || c == 0) throw InvalidArgument("coefficient vector does not match the digraph");

    std::vector<bool> verdict(static_cast<std::size_t>(n), false);
    if (code.is_binary()) {
        std::vector<std::uint64_t> rows;
        for (const auto& s : code.symbols) {
            std::uint64_t m = 0;
            for (auto [v, c] : s.coeffs) m |= std::uint64_t{1} << (v - 1);
            rows.push_back(m);
        }
        for (Vertex i = 1; i <= n; ++i) verdict[static_cast<std::size_t>(i - 1)] = binary_decodable(rows, g.out_mask(i), i);
        return verdict;
    }

    // GF(2^8): compare ranks with and without e_i appended, after zeroing
    // the receiver's known columns.
    for (Vertex i = 1; i <= n; ++i) {
        const int rows = code.length();
        GfMatrix m(rows + 1, n);
        for (int r = 0; r < rows; ++r)
            for (auto [v, c] : code.symbols[static_cast<std::size_t>(r)].coeffs)
                if (!g.has_arc(i, v)) m.at(r, v - 1) = Gf256(c);
        GfMatrix without(rows, n);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < n; ++c) without.at(r, c) = m.at(r, c);
        m.at(rows, i - 1) = Gf256(1);
        verdict[static_cast<std::size_t>(i - 1)] = rank(m) == rank(without);
    }
    return verdict;
}

}  // namespace icc

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icc/digraph.hpp"
#include "icc/ic.hpp"
#include "icc/schemes.hpp"

namespace icc {

using Bytes = std::vector<std::uint8_t>;

/// N messages of t >= 1 bytes each; messages[v - 1] is x_v.
class MessageBlock {
public:
    /// Throws InvalidArgument for an empty block, empty messages or unequal
    /// lengths.
    explicit MessageBlock(std::vector<Bytes> messages);

    int n() const noexcept { return static_cast<int>(messages_.size()); }
    std::size_t t() const noexcept { return messages_.front().size(); }
    const Bytes& at(Vertex v) const { return messages_.at(static_cast<std::size_t>(v - 1)); }
    const std::vector<Bytes>& messages() const noexcept { return messages_; }

    /// n messages of t bytes drawn from the given seed.
    static MessageBlock random(int n, std::size_t t, std::uint64_t seed);

private:
    std::vector<Bytes> messages_;
};

/// Linear combination of messages. Coefficients live in GF(2^8); a symbol
/// whose coefficients are all 1 is a plain XOR.
struct CodedSymbol {
    std::map<Vertex, std::uint8_t> coeffs;  ///< nonzero entries only

    static CodedSymbol xor_of(VertexSet vs);
    friend bool operator==(const CodedSymbol&, const CodedSymbol&) = default;
};

struct IndexCode {
    std::string scheme;
    std::vector<CodedSymbol> symbols;

    int length() const noexcept { return static_cast<int>(symbols.size()); }
    /// True when every coefficient is 1 (the code lives over GF(2)).
    bool is_binary() const;
    /// "x1+x2+x3, x4+x3" style listing (coefficients shown when not 1).
    std::string to_string() const;

    friend bool operator==(const IndexCode&, const IndexCode&) = default;
};

/// payload[s] is symbol s evaluated bytewise on the messages.
using Payload = std::vector<Bytes>;

/// Messages the receivers hold, keyed by vertex.
using SideInfo = std::map<Vertex, Bytes>;

struct EncodedCode {
    IndexCode code;
    Payload payload;
};

Payload evaluate(const IndexCode& code, const MessageBlock& msgs);
EncodedCode encode(IndexCode code, const MessageBlock& msgs);

/// x_v for every out-neighbour v of `receiver` in g.
SideInfo side_info_for(const Digraph& g, Vertex receiver, const MessageBlock& msgs);

// ---------------------------------------------------------------- ICC

/// w_I over the inner set, then w_j = x_j + sum of x_q over the structure's
/// out-neighbours q of j, for non-inner j ascending. N - K + 1 symbols.
IndexCode icc_code(const ICStructure& ic);
EncodedCode icc_encode(const ICStructure& ic, const MessageBlock& msgs);

/// Recovers x_receiver from an icc_encode payload. Inner receivers XOR w_I
/// with Z_i (the w_j of the non-inner vertices of their tree) and cancel
/// their structure out-neighbours. Throws InvalidArgument when the receiver
/// is outside the structure or side information is missing.
Bytes icc_decode(const ICStructure& ic, const Payload& payload, Vertex receiver, const SideInfo& side_info);

/// Coefficient vector of w_I + Z_i, for the cancellation property.
CodedSymbol icc_inner_combination(const ICStructure& ic, Vertex i);

// ------------------------------------------------------ other schemes

/// x_{v1}+x_{v2}, ..., x_{v(M-1)}+x_{vM} for the cycle <v1,...,vM,v1>.
/// Throws InvalidArgument if c is not a closed simple path in g.
IndexCode cycle_code(const Digraph& g, const Path& c);
EncodedCode cycle_encode(const Digraph& g, const Path& c, const MessageBlock& msgs);

/// One XOR over the members. Throws InvalidArgument if s is not a clique.
IndexCode clique_code(const Digraph& g, VertexSet s);
EncodedCode clique_encode(const Digraph& g, VertexSet s, const MessageBlock& msgs);

/// |B| - min out-degree of g[B] rows of a Vandermonde generator over the
/// members of B in ascending order.
IndexCode partial_clique_code(const Digraph& g, VertexSet block);
EncodedCode partial_clique_encode(const Digraph& g, const MessageBlock& msgs);

/// Decodes the whole-digraph partial-clique code: known messages are
/// substituted and the remaining unknowns solved for.
Bytes partial_clique_decode(const Digraph& g, const Payload& payload, Vertex receiver, const SideInfo& side_info);

/// Concatenated block codes, blocks in partition order.
IndexCode partition_code(const Digraph& g, const Partition& p, const std::string& scheme);

/// ICC code of the quotient with every merged vertex expanded to its members.
IndexCode eicc_code(const EiccResult& r);
EncodedCode eicc_encode(const Digraph& g, const MessageBlock& msgs);

/// Generic linear decoder: finds a combination of code symbols and side
/// information equal to x_receiver. Throws SingularMatrix if none exists.
Bytes linear_decode(const Digraph& g, const IndexCode& code, const Payload& payload, Vertex receiver,
                    const SideInfo& side_info);

// ---------------------------------------------------------------- oracle

/// verdict[i - 1] is true iff e_i lies in the span of the code's symbols and
/// e_j for j in N+(i). Throws InvalidArgument when a symbol names a vertex
/// outside 1..n.
std::vector<bool> decodability_oracle(const Digraph& g, const IndexCode& code);

}  // namespace icc

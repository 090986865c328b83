#pragma once

#include <iosfwd>
#include <string>

#include "icc/bounds.hpp"
#include "icc/codec.hpp"
#include "icc/report.hpp"

namespace icc {

/// Graph text: '#' comment lines, then N, then one "u v" line per arc.
/// Throws ParseError on malformed input, duplicates, self-loops or labels
/// outside 1..N.
Digraph parse_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);
std::string format_graph(const Digraph& g);

/// {"scheme": tag, "symbols": [{"coeffs": {"<vertex>": c}}, ...]}
std::string code_to_json(const IndexCode& code);
IndexCode code_from_json(const std::string& text);

/// One lowercase hex line per message; all lines the same even length.
std::string format_hex_lines(const std::vector<Bytes>& rows);
std::vector<Bytes> parse_hex_lines(std::istream& in);
std::string to_hex(const Bytes& b);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Sorted-key JSON documents. Rationals are "p/q" strings.
std::string report_to_json(const SchemeReport& r);
std::string mais_to_json(const MaisResult& m);
std::string fractional_to_json(const FractionalSolution& f);
std::string certificate_to_json(const ICStructure& ic, const OptimalityCertificate& c);

/// Scheme / length table.
std::string report_to_table(const SchemeReport& r);

}  // namespace icc

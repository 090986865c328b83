#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "icc/corpus.hpp"
#include "icc/error.hpp"
#include "icc/io.hpp"

using namespace icc;

namespace {

Digraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

}  // namespace

TEST_CASE("graph text round trip") {
    for (const Digraph& g : {gen_fig2a(), gen_class_a(4), gen_fig8(), gen_random(12, 1, 3, 5), Digraph(3)})
        CHECK(parse(format_graph(g)) == g);
    const Digraph g = parse("# two-cycle\n\n2\n# arcs\n1 2\n  2 1  \n");
    CHECK(g == Digraph(2, {{1, 2}, {2, 1}}));
}

TEST_CASE("graph text errors") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse("x\n"), ParseError);
    CHECK_THROWS_AS(parse("0\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n1\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("code JSON") {
    IndexCode code{"icc", {CodedSymbol::xor_of({1, 2, 3}), CodedSymbol::xor_of({3, 4}), CodedSymbol{{{10, 7}, {2, 255}}}}};
    const auto text = code_to_json(code);
    CHECK(code_from_json(text) == code);
    CHECK(code_to_json(code_from_json(text)) == text);

    const auto j = nlohmann::json::parse(text);
    CHECK(j["scheme"] == "icc");
    CHECK(j["symbols"][1]["coeffs"]["4"] == 1);

    CHECK_THROWS_AS(code_from_json("{"), ParseError);
    CHECK_THROWS_AS(code_from_json(R"({"symbols": []})"), ParseError);
    CHECK_THROWS_AS(code_from_json(R"({"scheme": "x", "symbols": [{"coeffs": {"1": 256}}]})"), ParseError);
    CHECK_THROWS_AS(code_from_json(R"({"scheme": "x", "symbols": [{"coeffs": {"a": 1}}]})"), ParseError);
    CHECK_THROWS_AS(code_from_json(R"({"scheme": "x", "symbols": [{"coeffs": {}}]})"), ParseError);
}

TEST_CASE("hex lines") {
    const std::vector<Bytes> rows{{0x00, 0xab}, {0xff, 0x10}};
    const auto text = format_hex_lines(rows);
    CHECK(text == "00ab\nff10\n");
    std::istringstream in("00AB\n\nff10\n");
    CHECK(parse_hex_lines(in) == rows);
    std::istringstream odd("abc\n");
    CHECK_THROWS_AS(parse_hex_lines(odd), ParseError);
    std::istringstream bad("zz\n");
    CHECK_THROWS_AS(parse_hex_lines(bad), ParseError);
    std::istringstream uneven("00\n0000\n");
    CHECK_THROWS_AS(parse_hex_lines(uneven), ParseError);
    CHECK(to_hex({0x01, 0xfe}) == "01fe");
}

TEST_CASE("report JSON and table") {
    const auto r = full_report(gen_fig2a());
    const auto text = report_to_json(r);
    CHECK(text == report_to_json(full_report(gen_fig2a())));
    const auto j = nlohmann::json::parse(text);
    CHECK(j["lengths"]["icc"] == 3);
    CHECK(j["lengths"]["cl"] == 4);
    CHECK(j["mais"]["order"] == 3);
    CHECK(j["optimal"] == true);
    CHECK(j["lengths"]["ficc"].is_string());

    const auto table = report_to_table(r);
    CHECK(table.find("ICC") != std::string::npos);
    CHECK(table.find("MAIS (lower bound)") != std::string::npos);

    FractionalSolution f;
    f.objective = Rational(5, 2);
    f.terms.push_back({VertexSet{1, 2}, Rational(1, 2), 1});
    const auto fj = nlohmann::json::parse(fractional_to_json(f));
    CHECK(fj["objective"] == "5/2");
    CHECK(fj["terms"][0]["weight"] == "1/2");
}

TEST_CASE("rationals") {
    CHECK(to_string(Rational(5, 2)) == "5/2");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-1, 4)) == "-1/4");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("2") == Rational(2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

// icc: command-line front end for the interlinked-cycle-cover library.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 solver cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "icc/icc.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct Args {
    std::string input;
    std::string out;
    bool json = false;
    std::string scheme = "all";
    int cap = 0;  // 0: per-solver default
    std::uint64_t budget = icc::StructureSearchOptions{}.budget;
    std::uint64_t seed = 1;
    int k = 4;
    int n = 6;
    std::string family = "fig2a";
    std::string prob = "1/2";
    std::string code;
    std::string messages;
    std::string payload;
    int receiver = 0;
    std::string inner;
};

void emit(const Args& a, const std::string& text) {
    if (a.out.empty()) {
        std::cout << text;
    } else {
        icc::write_text_file(a.out, text);
    }
}

int cap_or(const Args& a, int fallback) { return a.cap > 0 ? a.cap : fallback; }

icc::ReportOptions report_options(const Args& a) {
    icc::ReportOptions o;
    o.scheme = a.scheme;
    o.budget = a.budget;
    o.cap = cap_or(a, o.cap);
    o.mais_cap = std::max(o.mais_cap, a.cap);
    o.fractional_cap = cap_or(a, o.fractional_cap);
    return o;
}

icc::MessageBlock read_messages(const std::string& path, int n) {
    std::istringstream in(icc::read_text_file(path));
    auto rows = icc::parse_hex_lines(in);
    if (static_cast<int>(rows.size()) != n) {
        throw icc::ParseError("message file has " + std::to_string(rows.size()) + " lines, expected " +
                              std::to_string(n));
    }
    try {
        return icc::MessageBlock(std::move(rows));
    } catch (const icc::InvalidArgument& e) {
        throw icc::ParseError(e.what());
    }
}

icc::IndexCode build_code(const icc::Digraph& g, const Args& a) {
    icc::StructureSearchOptions so;
    so.budget = a.budget;
    const int cap = cap_or(a, icc::kSubsetDpCap);
    const std::string s = a.scheme == "all" ? "icc" : a.scheme;
    if (s == "icc") return icc::partition_code(g, icc::icc_length(g, so).partition, "icc");
    if (s == "eicc") return icc::eicc_code(icc::eicc_length(g, so));
    if (s == "cl") return icc::partition_code(g, icc::clique_cover_number(g, cap).partition, "cl");
    if (s == "cy") return icc::partition_code(g, icc::cycle_cover_number(g, cap).partition, "cy");
    if (s == "pc") return icc::partition_code(g, icc::partial_clique_number(g, cap).partition, "pc");
    throw icc::InvalidArgument("scheme '" + s + "' has no integral code to encode");
}

std::string verdict_lines(const std::vector<bool>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << "receiver " << i + 1 << ": " << (v[i] ? "ok" : "FAIL") << '\n';
    return os.str();
}

int run_analyze(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    const auto r = icc::full_report(g, report_options(a));
    emit(a, a.json ? icc::report_to_json(r) : icc::report_to_table(r));
    return 0;
}

int run_encode(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    const auto code = build_code(g, a);
    if (!a.messages.empty()) {
        if (a.payload.empty()) throw icc::InvalidArgument("--messages needs --payload for the coded symbols");
        const auto msgs = read_messages(a.messages, g.n());
        icc::write_text_file(a.payload, icc::format_hex_lines(icc::evaluate(code, msgs)));
    }
    emit(a, icc::code_to_json(code));
    return 0;
}

int run_decode(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    const auto code = icc::code_from_json(icc::read_text_file(a.code));
    std::istringstream pin(icc::read_text_file(a.payload));
    const auto payload = icc::parse_hex_lines(pin);
    if (static_cast<int>(payload.size()) != code.length()) throw icc::ParseError("payload does not match the code");
    // Receivers draw their side information from the message file.
    const auto msgs = read_messages(a.messages, g.n());

    std::ostringstream os;
    bool all_ok = true;
    for (icc::Vertex v = 1; v <= g.n(); ++v) {
        if (a.receiver != 0 && v != a.receiver) continue;
        try {
            auto x = icc::linear_decode(g, code, payload, v, icc::side_info_for(g, v, msgs));
            os << v << ' ' << icc::to_hex(x) << '\n';
        } catch (const icc::SingularMatrix&) {
            os << v << " undecodable\n";
            all_ok = false;
        }
    }
    emit(a, os.str());
    return all_ok ? 0 : kExitVerify;
}

int run_verify(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    const auto code = icc::code_from_json(icc::read_text_file(a.code));
    const auto v = icc::decodability_oracle(g, code);
    emit(a, verdict_lines(v));
    for (bool ok : v)
        if (!ok) return kExitVerify;
    return 0;
}

int run_mais(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    const auto m = icc::mais(g, cap_or(a, icc::kMaisCap));
    emit(a, a.json ? icc::mais_to_json(m) : "MAIS " + std::to_string(m.order) + " witness " + m.witness.to_string() + "\n");
    return 0;
}

int run_frac(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    const auto f = icc::fractional_icc(g, cap_or(a, icc::kFractionalCap));
    if (a.json) {
        emit(a, icc::fractional_to_json(f));
    } else {
        std::ostringstream os;
        os << "fractional ICC " << icc::to_string(f.objective) << '\n';
        for (const auto& t : f.terms) os << "  " << t.support.to_string() << " weight " << icc::to_string(t.weight) << " cost " << t.cost << '\n';
        emit(a, os.str());
    }
    return 0;
}

int run_gen(const Args& a) {
    icc::FamilySpec spec;
    spec.family = icc::parse_family(a.family);
    spec.k = a.k;
    spec.n = a.n;
    spec.seed = a.seed;
    const auto p = icc::parse_rational(a.prob);
    if (p < 0 || p > 1) throw icc::InvalidArgument("--p must lie in [0, 1]");
    spec.num = static_cast<std::uint64_t>(boost::multiprecision::numerator(p));
    spec.den = static_cast<std::uint64_t>(boost::multiprecision::denominator(p));
    emit(a, icc::format_graph(icc::generate(spec)));
    return 0;
}

icc::VertexSet parse_vertex_list(const std::string& text) {
    icc::VertexSet s;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            s.insert(std::stoi(item));
        } catch (const std::exception&) {
            throw icc::ParseError("bad vertex list: " + text);
        }
    }
    return s;
}

int run_certify(const Args& a) {
    const auto g = icc::read_graph_file(a.input);
    std::vector<icc::ICStructure> structures;
    if (!a.inner.empty()) {
        const auto inner = parse_vertex_list(a.inner);
        if (!inner.is_subset_of(g.vertices())) throw icc::ParseError("inner vertex outside the digraph");
        auto v = icc::validate_ic(g, inner);
        if (auto* bad = std::get_if<icc::Violation>(&v)) {
            emit(a, "not an IC structure: " + bad->describe() + "\n");
            return kExitVerify;
        }
        structures.push_back(std::get<icc::ICStructure>(v));
    } else {
        icc::StructureSearchOptions so;
        so.budget = a.budget;
        for (const auto& b : icc::icc_length(g, so).partition.blocks)
            if (b.ic) structures.push_back(*b.ic);
    }
    std::ostringstream os;
    for (const auto& ic : structures) {
        const auto c = icc::certify_optimal(ic);
        if (a.json) {
            os << icc::certificate_to_json(ic, c);
        } else {
            os << "support " << ic.support().to_string() << " inner " << ic.inner().to_string() << " length "
               << ic.code_length() << ": " << icc::to_string(c.kind);
            if (c.kind != icc::OptimalityCertificate::Kind::None) os << " removed " << c.removed.to_string();
            os << '\n';
        }
    }
    if (structures.empty()) os << (a.json ? "" : "no IC structure with K >= 2\n");
    emit(a, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interlinked-cycle-cover index coding"};
    app.require_subcommand(1);
    Args a;

    auto input = [&](CLI::App* sc) { sc->add_option("--input", a.input, "graph file")->required()->check(CLI::ExistingFile); };
    auto common = [&](CLI::App* sc) {
        sc->add_option("--out", a.out, "write output here instead of stdout");
        sc->add_flag("--json", a.json, "JSON output");
        sc->add_option("--cap", a.cap, "exact-solver size cap");
        sc->add_option("--budget", a.budget, "structure-search step budget");
    };
    const std::vector<std::string> schemes{"all", "cl", "cy", "pc", "icc", "eicc", "ficc"};

    auto* analyze = app.add_subcommand("analyze", "run every scheme and MAIS on a digraph");
    input(analyze);
    common(analyze);
    analyze->add_option("--scheme", a.scheme)->check(CLI::IsMember(schemes));

    auto* encode = app.add_subcommand("encode", "emit a scheme's code (and payload)");
    input(encode);
    common(encode);
    encode->add_option("--scheme", a.scheme)->check(CLI::IsMember(schemes));
    encode->add_option("--messages", a.messages, "hex message file")->check(CLI::ExistingFile);
    encode->add_option("--payload", a.payload, "where to write the coded payload");

    auto* decode = app.add_subcommand("decode", "recover every receiver's message");
    input(decode);
    common(decode);
    decode->add_option("--code", a.code)->required()->check(CLI::ExistingFile);
    decode->add_option("--payload", a.payload)->required()->check(CLI::ExistingFile);
    decode->add_option("--messages", a.messages, "source of side information")->required()->check(CLI::ExistingFile);
    decode->add_option("--receiver", a.receiver, "decode only this receiver");

    auto* verify = app.add_subcommand("verify", "check every receiver can decode");
    input(verify);
    common(verify);
    verify->add_option("--code", a.code)->required()->check(CLI::ExistingFile);

    auto* mais_cmd = app.add_subcommand("mais", "maximum acyclic induced sub-digraph");
    input(mais_cmd);
    common(mais_cmd);

    auto* frac = app.add_subcommand("frac", "fractional ICC by exact LP");
    input(frac);
    common(frac);

    auto* gen = app.add_subcommand("gen", "generate a corpus digraph");
    gen->add_option("--out", a.out);
    gen->add_option("--family", a.family)->check(CLI::IsMember({"fig2a", "class-a", "example4", "fig8", "random"}));
    gen->add_option("--k", a.k, "class-a K");
    gen->add_option("--n", a.n, "example4 / random N");
    gen->add_option("--seed", a.seed);
    gen->add_option("--p", a.prob, "random arc probability as p/q");

    auto* certify = app.add_subcommand("certify", "optimality certificates for IC structures");
    input(certify);
    common(certify);
    certify->add_option("--inner", a.inner, "comma-separated inner set to validate on the whole digraph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*analyze) return run_analyze(a);
        if (*encode) return run_encode(a);
        if (*decode) return run_decode(a);
        if (*verify) return run_verify(a);
        if (*mais_cmd) return run_mais(a);
        if (*frac) return run_frac(a);
        if (*gen) return run_gen(a);
        if (*certify) return run_certify(a);
    } catch (const icc::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const icc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const icc::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerify;
    }
    return 0;
}

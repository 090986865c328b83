#include "icc/io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "icc/error.hpp"

namespace icc {

using nlohmann::json;

namespace {

bool skip_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

json set_json(VertexSet s) { return json(s.members()); }

json path_json(const Path& p) { return json(p.vertices); }

json partition_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) {
        json jb{{"kind", to_string(b.kind)}, {"vertices", set_json(b.vertices)}, {"length", b.length}};
        if (b.ic) jb["inner"] = set_json(b.ic->inner());
        if (b.cycle) jb["cycle"] = path_json(*b.cycle);
        blocks.push_back(std::move(jb));
    }
    return blocks;
}

json certificate_obj(const OptimalityCertificate& c) {
    json j{{"kind", to_string(c.kind)}, {"removed", set_json(c.removed)}};
    if (c.kind == OptimalityCertificate::Kind::Case2) {
        json cyc = json::array();
        for (const auto& p : c.cycles) cyc.push_back(path_json(p));
        json grp = json::array();
        for (auto g : c.groups) grp.push_back(set_json(g));
        j["cycles"] = cyc;
        j["groups"] = grp;
    }
    return j;
}

json fractional_obj(const FractionalSolution& f) {
    json terms = json::array();
    for (const auto& t : f.terms) {
        terms.push_back({{"support", set_json(t.support)}, {"weight", to_string(t.weight)}, {"cost", t.cost}});
    }
    return {{"objective", to_string(f.objective)}, {"terms", terms}, {"exact", f.exact}};
}

}  // namespace

// ---------------------------------------------------------------- graphs

Digraph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    int lineno = 0;
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (n < 0) {
            if (!(ls >> n) || n < 1 || n > kMaxVertices) throw ParseError(where + "expected a vertex count in 1..64");
        } else {
            Arc a{};
            if (!(ls >> a.from >> a.to)) throw ParseError(where + "expected 'u v'");
            if (a.from < 1 || a.from > n || a.to < 1 || a.to > n) throw ParseError(where + "vertex out of range");
            if (a.from == a.to) throw ParseError(where + "self-loop");
            if (!seen.insert(a).second) throw ParseError(where + "duplicate arc");
            arcs.push_back(a);
        }
        std::string extra;
        if (ls >> extra) throw ParseError(where + "trailing text");
    }
    if (n < 0) throw ParseError("missing vertex count");
    return Digraph(n, arcs);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Error("cannot write " + path);
}

Digraph read_graph_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    return parse_graph(in);
}

std::string format_graph(const Digraph& g) {
    std::ostringstream os;
    os << g.n() << '\n';
    for (const Arc& a : g.arcs()) os << a.from << ' ' << a.to << '\n';
    return os.str();
}

// ---------------------------------------------------------------- codes

std::string code_to_json(const IndexCode& code) {
    json syms = json::array();
    for (const auto& s : code.symbols) {
        json coeffs = json::object();
        for (auto [v, c] : s.coeffs) coeffs[std::to_string(v)] = c;
        syms.push_back({{"coeffs", coeffs}});
    }
    return json{{"scheme", code.scheme}, {"symbols", syms}}.dump(2) + "\n";
}

IndexCode code_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        IndexCode code;
        code.scheme = j.at("scheme").get<std::string>();
        for (const auto& s : j.at("symbols")) {
            CodedSymbol sym;
            for (const auto& [key, val] : s.at("coeffs").items()) {
                std::size_t used = 0;
                const int v = std::stoi(key, &used);
                const int c = val.get<int>();
                if (used != key.size() || v < 1 || v > kMaxVertices) throw ParseError("bad vertex key '" + key + "'");
                if (c < 0 || c > 255) throw ParseError("coefficient out of range for x" + key);
                if (c != 0) sym.coeffs[v] = static_cast<std::uint8_t>(c);
            }
            if (sym.coeffs.empty()) throw ParseError("symbol without nonzero coefficients");
            code.symbols.push_back(std::move(sym));
        }
        return code;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid code JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------- hex

std::string to_hex(const Bytes& b) {
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (auto x : b) os << std::setw(2) << static_cast<int>(x);
    return os.str();
}

std::string format_hex_lines(const std::vector<Bytes>& rows) {
    std::string out;
    for (const auto& r : rows) out += to_hex(r) + "\n";
    return out;
}

std::vector<Bytes> parse_hex_lines(std::istream& in) {
    std::vector<Bytes> rows;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.size() % 2 != 0) throw ParseError("hex line with odd length");
        Bytes b;
        for (std::size_t k = 0; k < line.size(); k += 2) {
            const std::string pair = line.substr(k, 2);
            if (pair.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
                throw ParseError("non-hex character in '" + line + "'");
            }
            b.push_back(static_cast<std::uint8_t>(std::stoi(pair, nullptr, 16)));
        }
        if (!rows.empty() && b.size() != rows.front().size()) throw ParseError("hex lines differ in length");
        rows.push_back(std::move(b));
    }
    return rows;
}

// ---------------------------------------------------------------- reports

std::string mais_to_json(const MaisResult& m) {
    return json{{"order", m.order}, {"witness", set_json(m.witness)}}.dump(2) + "\n";
}

std::string fractional_to_json(const FractionalSolution& f) { return fractional_obj(f).dump(2) + "\n"; }

std::string certificate_to_json(const ICStructure& ic, const OptimalityCertificate& c) {
    json j = certificate_obj(c);
    j["inner"] = set_json(ic.inner());
    j["support"] = set_json(ic.support());
    j["length"] = ic.code_length();
    return j.dump(2) + "\n";
}

std::string report_to_json(const SchemeReport& r) {
    json lengths = json::object();
    json witnesses = json::object();
    json exact = json::object();
    auto add = [&](const char* key, const std::optional<SchemeResult>& s) {
        if (!s) return;
        lengths[key] = s->length;
        witnesses[key] = partition_json(s->partition);
        exact[key] = s->exact;
    };
    add("cl", r.cl);
    add("cy", r.cy);
    add("pc", r.pc);
    add("icc", r.icc);
    if (r.eicc) {
        lengths["eicc"] = r.eicc->length;
        json collapsed = json::array();
        for (const auto& sv : r.eicc->collapsed) collapsed.push_back(set_json(sv.members));
        json blocks = partition_json(r.eicc->quotient_icc.partition);
        // Report EICC blocks in host labels.
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const auto& b = r.eicc->quotient_icc.partition.blocks[k];
            blocks[k]["vertices"] = set_json(r.eicc->quotient.expand(b.vertices));
            if (b.ic) blocks[k]["inner"] = set_json(r.eicc->quotient.expand(b.ic->inner()));
            blocks[k].erase("cycle");
        }
        witnesses["eicc"] = {{"collapsed", collapsed}, {"blocks", blocks}};
        exact["eicc"] = r.eicc->exact;
    }
    if (r.ficc) {
        lengths["ficc"] = to_string(r.ficc->objective);
        witnesses["ficc"] = fractional_obj(*r.ficc);
        exact["ficc"] = r.ficc->exact;
    }
    if (r.flcn) lengths["flcn"] = *r.flcn;

    json certs = json::array();
    for (const auto& c : r.certificates) {
        json j = certificate_obj(c.certificate);
        j["support"] = set_json(c.support);
        j["inner"] = set_json(c.inner);
        certs.push_back(std::move(j));
    }
    json doc{{"n", r.n},
             {"lengths", lengths},
             {"exact", exact},
             {"witnesses", witnesses},
             {"mais", {{"order", r.mais.order}, {"witness", set_json(r.mais.witness)}}},
             {"certificates", certs},
             {"optimal", r.optimal},
             {"notes", r.notes}};
    return doc.dump(2) + "\n";
}

std::string report_to_table(const SchemeReport& r) {
    std::ostringstream os;
    auto row = [&](const std::string& name, const std::string& value) {
        os << std::left << std::setw(28) << name << value << '\n';
    };
    row("Scheme", "Length");
    row("------", "------");
    auto mark = [](const std::optional<SchemeResult>& s) {
        return std::to_string(s->length) + (s->exact ? "" : " (upper bound)");
    };
    if (r.cl) row("Clique cover", mark(r.cl));
    if (r.cy) row("Cycle cover", mark(r.cy));
    if (r.pc) row("Partial-clique cover", mark(r.pc));
    if (r.flcn) row("Local chromatic (formula)", std::to_string(*r.flcn));
    if (r.ficc) row("Fractional ICC", to_string(r.ficc->objective));
    if (r.icc) row("ICC", mark(r.icc));
    if (r.eicc) row("Extended ICC", std::to_string(r.eicc->length));
    row("MAIS (lower bound)", std::to_string(r.mais.order));
    os << '\n' << "ICC optimal: " << (r.optimal ? "yes" : "not certified") << '\n';
    for (const auto& c : r.certificates) {
        os << "  block " << c.support.to_string() << " inner " << c.inner.to_string() << ": "
           << to_string(c.certificate.kind) << '\n';
    }
    for (const auto& note : r.notes) os << "note: " << note << '\n';
    return os.str();
}

}  // namespace icc

#include "icc/report.hpp"

#include <algorithm>

#include "icc/error.hpp"

namespace icc {

namespace {

bool wants(const ReportOptions& o, const char* s) { return o.scheme == "all" || o.scheme == s; }

void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation("report invariant failed: " + what);
}

}  // namespace

SchemeReport full_report(const Digraph& g, const ReportOptions& opts) {
    static const char* const kSchemes[] = {"all", "cl", "cy", "pc", "icc", "eicc", "ficc"};
    if (std::find(std::begin(kSchemes), std::end(kSchemes), opts.scheme) == std::end(kSchemes)) {
        throw InvalidArgument("unknown scheme: " + opts.scheme);
    }
    SchemeReport r;
    r.n = g.n();
    StructureSearchOptions so;
    so.budget = opts.budget;

    if (wants(opts, "cl")) r.cl = clique_cover_number(g, opts.cap);
    if (wants(opts, "cy")) r.cy = cycle_cover_number(g, opts.cap);
    if (wants(opts, "pc")) r.pc = partial_clique_number(g, opts.cap);
    // ICC also backs the optimality flag, so it runs for every selection.
    r.icc = icc_length(g, so);
    if (wants(opts, "eicc")) r.eicc = eicc_length(g, so);
    if (wants(opts, "ficc")) {
        if (g.n() <= opts.fractional_cap) {
            r.ficc = fractional_icc(g, opts.fractional_cap);
        } else {
            r.notes.push_back("fractional ICC skipped: n exceeds " + std::to_string(opts.fractional_cap));
        }
    }
    if (opts.scheme == "all") {
        if (has_bidirectional_arc(g)) {
            r.notes.push_back("local-chromatic formula not applicable: bidirectional arcs present");
        } else {
            r.flcn = flcn_bidirection_free(g);
        }
    }
    r.mais = mais(g, opts.mais_cap);

    for (const auto& b : r.icc->partition.blocks) {
        if (b.ic) r.certificates.push_back({b.ic->support(), b.ic->inner(), certify_optimal(*b.ic)});
    }
    r.optimal = r.icc->length == r.mais.order;
    if (!r.icc->exact) r.notes.push_back("ICC search hit its budget; length is an upper bound");

    const int icc = r.icc->length;
    if (r.cl && r.cy) {
        const int m = std::min(r.cl->length, r.cy->length);
        require(!r.icc->exact || icc <= m, "ICC <= min(CL, CY)");
        if (r.pc) require(r.pc->length <= m, "PC <= min(CL, CY)");
    }
    auto lower = [&](int len, const char* name) { require(r.mais.order <= len, std::string("MAIS <= ") + name); };
    for (const auto* s : {&r.cl, &r.cy, &r.pc, &r.icc})
        if (*s) lower((*s)->length, "scheme length");
    if (r.eicc) {
        lower(r.eicc->length, "EICC");
        require(!r.eicc->exact || !r.icc->exact || r.eicc->length <= icc, "EICC <= ICC");
    }
    if (r.flcn) lower(*r.flcn, "FLCN");
    if (r.ficc) {
        require(!r.ficc->exact || r.ficc->objective <= icc, "FICC <= ICC");
        require(r.ficc->objective >= r.mais.order, "MAIS <= FICC");
    }
    return r;
}

}  // namespace icc

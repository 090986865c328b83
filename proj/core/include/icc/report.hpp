#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icc/bounds.hpp"
#include "icc/schemes.hpp"

namespace icc {

struct ReportOptions {
    /// "all", "cl", "cy", "pc", "icc", "eicc" or "ficc". MAIS always runs.
    std::string scheme = "all";
    int cap = kSubsetDpCap;
    int mais_cap = kMaisCap;
    /// The fractional LP is skipped (with a note) above this many vertices.
    int fractional_cap = kFractionalCap;
    std::uint64_t budget = StructureSearchOptions{}.budget;
};

struct BlockCertificate {
    VertexSet support;
    VertexSet inner;
    OptimalityCertificate certificate;
};

struct SchemeReport {
    int n = 0;
    std::optional<SchemeResult> cl, cy, pc, icc;
    std::optional<EiccResult> eicc;
    std::optional<FractionalSolution> ficc;
    std::optional<int> flcn;
    MaisResult mais;
    /// One per IC block of the ICC partition.
    std::vector<BlockCertificate> certificates;
    /// The ICC length meets the MAIS lower bound.
    bool optimal = false;
    std::vector<std::string> notes;
};

/// Runs the selected solvers plus MAIS and checks the cross-scheme
/// inequalities (ICC and PC at most min(CL, CY); MAIS at most every length;
/// FICC at most ICC; EICC at most ICC). Throws InvariantViolation if one
/// fails and CapExceeded from the solvers.
SchemeReport full_report(const Digraph& g, const ReportOptions& opts = {});

}  // namespace icc

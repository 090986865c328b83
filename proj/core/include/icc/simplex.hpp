#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace icc {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
/// Inverse of to_string. Throws ParseError.
Rational parse_rational(const std::string& s);

struct LpSolution {
    Rational objective;
    std::vector<Rational> x;     ///< primal values, one per column
    std::vector<Rational> dual;  ///< one per row; certifies optimality
};

/// Exact solution of   minimize c.x  subject to  A x >= b,  x >= 0
/// for c >= 0 (so the all-slack basis is dual feasible). Dual simplex with
/// Bland's rule. The returned primal and dual are checked for feasibility
/// and equal objectives before returning (InvariantViolation otherwise).
/// Throws InvalidArgument on shape errors or negative costs, and Error when
/// the program is infeasible.
LpSolution minimize_covering_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                                const std::vector<Rational>& c);

}  // namespace icc

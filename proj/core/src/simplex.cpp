#include "icc/simplex.hpp"

#include "icc/error.hpp"

namespace icc {

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    using boost::multiprecision::cpp_int;
    try {
        auto slash = s.find('/');
        if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) throw ParseError("");
        if (slash == std::string::npos) return Rational(cpp_int(s));
        cpp_int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("");
        return Rational(cpp_int(s.substr(0, slash)), den);
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

LpSolution minimize_covering_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                                const std::vector<Rational>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw InvalidArgument("lp: row count mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidArgument("lp: column count mismatch");
    for (const auto& cj : c)
        if (cj < 0) throw InvalidArgument("lp: costs must be nonnegative");

    // Tableau over columns [x (n) | s (m)] for -A x + s = -b. Row r holds the
    // basic variable basis[r]; the last column is the right-hand side.
    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) t[r][j] = -a[r][j];
        t[r][n + r] = 1;
        t[r][cols] = -b[r];
        basis[r] = n + r;
    }
    std::vector<Rational> reduced(cols + 1);
    for (std::size_t j = 0; j < n; ++j) reduced[j] = c[j];

    while (true) {
        // Leaving row: infeasible basic variable with the smallest index.
        std::size_t leave = m;
        for (std::size_t r = 0; r < m; ++r) {
            if (t[r][cols] < 0 && (leave == m || basis[r] < basis[leave])) leave = r;
        }
        if (leave == m) break;

        std::size_t enter = cols;
        Rational best;
        for (std::size_t j = 0; j < cols; ++j) {
            if (t[leave][j] >= 0) continue;
            Rational ratio = reduced[j] / -t[leave][j];
            if (enter == cols || ratio < best) {
                enter = j;
                best = ratio;
            }
        }
        if (enter == cols) throw Error("lp: infeasible");

        Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rational f = t[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
        }
        if (reduced[enter] != 0) {
            Rational f = reduced[enter];
            for (std::size_t j = 0; j <= cols; ++j) reduced[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution sol;
    sol.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) sol.x[basis[r]] = t[r][cols];
    sol.dual.resize(m);
    for (std::size_t r = 0; r < m; ++r) sol.dual[r] = reduced[n + r];

    // Certificate: primal feasible, dual feasible, equal objectives.
    Rational primal = 0, dual = 0;
    for (std::size_t j = 0; j < n; ++j) primal += c[j] * sol.x[j];
    for (std::size_t r = 0; r < m; ++r) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += a[r][j] * sol.x[j];
        if (lhs < b[r] || sol.dual[r] < 0) throw InvariantViolation("lp: solution not feasible");
        dual += b[r] * sol.dual[r];
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational lhs = 0;
        for (std::size_t r = 0; r < m; ++r) lhs += a[r][j] * sol.dual[r];
        if (lhs > c[j] || sol.x[j] < 0) throw InvariantViolation("lp: dual not feasible");
    }
    if (primal != dual) throw InvariantViolation("lp: duality gap");
    sol.objective = primal;
    return sol;
}

}  // namespace icc

#include "icc/galois.hpp"

#include <array>
#include <string>
#include <utility>

#include "icc/error.hpp"

namespace icc {

namespace {

struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<int, 256> log{};
};

constexpr Tables make_tables() {
    Tables t;
    unsigned x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
        t.log[x] = i;
        x <<= 1;
        if (x & 0x100) x ^= Gf256::kPolynomial;
    }
    for (int i = 255; i < 512; ++i) t.exp[static_cast<std::size_t>(i)] = t.exp[static_cast<std::size_t>(i - 255)];
    t.log[0] = -1;
    return t;
}

constexpr Tables kTables = make_tables();

}  // namespace

Gf256 operator*(Gf256 a, Gf256 b) {
    if (a.is_zero() || b.is_zero()) return Gf256{};
    return Gf256(kTables.exp[static_cast<std::size_t>(kTables.log[a.value()] + kTables.log[b.value()])]);
}

Gf256 Gf256::inverse() const {
    if (is_zero()) throw InvalidArgument("zero has no multiplicative inverse in GF(2^8)");
    return Gf256(kTables.exp[static_cast<std::size_t>(255 - kTables.log[value_])]);
}

Gf256 operator/(Gf256 a, Gf256 b) { return a * b.inverse(); }

Gf256 Gf256::pow(unsigned e) const {
    if (e == 0) return Gf256(1);
    if (is_zero()) return Gf256{};
    unsigned l = (static_cast<unsigned>(kTables.log[value_]) * (e % 255)) % 255;
    return Gf256(kTables.exp[l]);
}

Gf256 field_mul(Gf256 a, Gf256 b) { return a * b; }
Gf256 field_inv(Gf256 a) { return a.inverse(); }

GfMatrix::GfMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Gf256{});
}

GfMatrix GfMatrix::identity(int n) {
    GfMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Gf256(1);
    return m;
}

GfMatrix GfMatrix::select(std::span<const int> row_idx, std::span<const int> col_idx) const {
    GfMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = at(row_idx[r], col_idx[c]);
    return out;
}

GfMatrix vandermonde_mds(int k, int n) {
    if (n > 255) throw InvalidArgument("MDS length " + std::to_string(n) + " exceeds 255 evaluation points");
    if (k < 1 || k > n) throw InvalidArgument("need 1 <= k <= n for an MDS generator");
    GfMatrix m(k, n);
    for (int c = 0; c < n; ++c) {
        Gf256 alpha(static_cast<std::uint8_t>(c + 1));
        for (int r = 0; r < k; ++r) m.at(r, c) = alpha.pow(static_cast<unsigned>(r));
    }
    return m;
}

int rank(GfMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        Gf256 inv = m.at(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Gf256 f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) += f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

bool is_invertible(const GfMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<std::vector<std::uint8_t>> solve_linear(const GfMatrix& m,
                                                    const std::vector<std::vector<std::uint8_t>>& rhs) {
    if (m.rows() != m.cols()) throw InvalidArgument("solve_linear needs a square matrix");
    if (static_cast<int>(rhs.size()) != m.rows()) throw InvalidArgument("right-hand side height mismatch");
    const int n = m.rows();
    std::size_t width = rhs.empty() ? 0 : rhs.front().size();
    for (const auto& row : rhs) {
        if (row.size() != width) throw InvalidArgument("right-hand side rows differ in length");
    }
    GfMatrix a = m;
    std::vector<std::vector<Gf256>> b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        b[i].reserve(width);
        for (auto byte : rhs[i]) b[i].emplace_back(byte);
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw SingularMatrix("matrix is singular over GF(2^8)");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            std::swap(b[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(piv)]);
        }
        Gf256 inv = a.at(c, c).inverse();
        for (int j = 0; j < n; ++j) a.at(c, j) *= inv;
        for (auto& x : b[static_cast<std::size_t>(c)]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            Gf256 f = a.at(i, c);
            for (int j = 0; j < n; ++j) a.at(i, j) += f * a.at(c, j);
            auto& bi = b[static_cast<std::size_t>(i)];
            const auto& bc = b[static_cast<std::size_t>(c)];
            for (std::size_t t = 0; t < width; ++t) bi[t] += f * bc[t];
        }
    }
    std::vector<std::vector<std::uint8_t>> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i].reserve(width);
        for (auto x : b[i]) out[i].push_back(x.value());
    }
    return out;
}

}  // namespace icc

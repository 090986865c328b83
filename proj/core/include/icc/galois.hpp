#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace icc {

/// Element of GF(2^8) with reduction polynomial x^8+x^4+x^3+x^2+1 (0x11D).
/// Addition is XOR; multiplication goes through log/antilog tables.
class Gf256 {
public:
    static constexpr unsigned kPolynomial = 0x11D;

    constexpr Gf256() = default;
    constexpr explicit Gf256(std::uint8_t v) : value_(v) {}

    constexpr std::uint8_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr Gf256 operator+(Gf256 a, Gf256 b) { return Gf256(static_cast<std::uint8_t>(a.value_ ^ b.value_)); }
    friend constexpr Gf256 operator-(Gf256 a, Gf256 b) { return a + b; }
    friend Gf256 operator*(Gf256 a, Gf256 b);
    friend Gf256 operator/(Gf256 a, Gf256 b);
    Gf256& operator+=(Gf256 o) { return *this = *this + o; }
    Gf256& operator*=(Gf256 o) { return *this = *this * o; }
    friend constexpr bool operator==(Gf256, Gf256) = default;

    /// Throws InvalidArgument for zero.
    Gf256 inverse() const;
    /// this^e, with 0^0 = 1.
    Gf256 pow(unsigned e) const;

private:
    std::uint8_t value_ = 0;
};

Gf256 field_mul(Gf256 a, Gf256 b);
Gf256 field_inv(Gf256 a);

/// Dense row-major matrix over GF(2^8).
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Gf256& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    Gf256 at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    /// Sub-matrix keeping the listed rows and columns, in the given order.
    GfMatrix select(std::span<const int> row_idx, std::span<const int> col_idx) const;

    static GfMatrix identity(int n);

    friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Gf256> data_;
};

/// k x n Vandermonde generator: entry (r, c) = alpha_c^r with alpha_c = c+1
/// (distinct nonzero evaluation points). Every k x k submatrix is invertible.
/// Requires 1 <= k <= n <= 255.
GfMatrix vandermonde_mds(int k, int n);

int rank(GfMatrix m);
bool is_invertible(const GfMatrix& m);

/// Solves m * x = rhs where each right-hand side entry is a vector of bytes
/// (one independent system per byte position). rhs.size() == m.rows().
/// Throws SingularMatrix when m is not invertible.
std::vector<std::vector<std::uint8_t>> solve_linear(const GfMatrix& m,
                                                    const std::vector<std::vector<std::uint8_t>>& rhs);

}  // namespace icc

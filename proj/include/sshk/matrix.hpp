#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sshk {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix with arbitrary-precision integer entries, row-major.
/// Empty dimensions (0 rows and/or 0 columns) are legal and meaningful.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

    IntMatrix transposed() const;
    bool is_zero() const;
    Int trace() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    IntMatrix pow(unsigned e) const;

    std::string str() const;
};

/// Dense matrix with exact rational entries (mpq keeps them normalized).
struct RatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> data;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    explicit RatMatrix(const IntMatrix& m);
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> init);

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static RatMatrix identity(std::size_t n);

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    /// Rank over the rationals (Gaussian elimination, exact).
    std::size_t rank() const;

    std::string str() const;
};

/// Horizontal concatenation [A | B]; row counts must match.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

/// Determinant via exact fraction-free elimination.
Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);

}  // namespace sshk

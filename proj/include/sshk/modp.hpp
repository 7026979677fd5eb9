#pragma once

#include "sshk/matrix.hpp"

namespace sshk {

bool is_prime(const Int& n);

/// Dense matrix over F_p, entries stored as canonical representatives 0..p-1.
struct ModPMatrix {
    long p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<long> data;

    ModPMatrix() = default;
    ModPMatrix(long p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), data(r * c) {}

    long& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    long at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static ModPMatrix identity(long p, std::size_t n);

    friend ModPMatrix operator*(const ModPMatrix& a, const ModPMatrix& b);
    friend ModPMatrix operator-(const ModPMatrix& a, const ModPMatrix& b);
    friend bool operator==(const ModPMatrix& a, const ModPMatrix& b) = default;

    std::size_t rank() const;
    std::size_t nullity() const { return cols - rank(); }
};

/// Entrywise reduction; rejects non-prime moduli.
ModPMatrix mod_p_reduce(const IntMatrix& m, long p);

std::size_t rank_mod_p(const IntMatrix& m, long p);
std::size_t nullity_mod_p(const IntMatrix& m, long p);

}  // namespace sshk

#pragma once

#include <vector>

#include "sshk/matrix.hpp"

namespace sshk {

/// Canonical invariant-factor form of a finitely generated abelian group.
/// torsion holds the invariant factors d_1 | d_2 | ... with every d_i >= 2;
/// factors equal to 1 are dropped and 0-factors are recorded as free rank.
struct FinGenAbGroup {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    bool is_free() const { return torsion.empty(); }
    /// Group order; 0 means infinite.
    Int order() const;

    static FinGenAbGroup trivial() { return {}; }
    static FinGenAbGroup free_abelian(std::size_t rank) { return {{}, rank}; }
    static FinGenAbGroup cyclic(const Int& n);  // Z/n, with Z/0 = Z and Z/1 = 0
    /// Canonicalize from a diagonal (SNF) sequence padded to ambient_rank.
    static FinGenAbGroup from_diag(const std::vector<Int>& diag, std::size_t ambient_rank);

    /// Direct sum, re-canonicalized into a single invariant-factor chain.
    FinGenAbGroup direct_sum(const FinGenAbGroup& other) const;

    /// Canonical rendering, e.g. "0", "Z", "Z^2 + Z/2 + Z/12", "(Z/2)^3".
    std::string render() const;

    friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;
};

/// U*M*V = D with U, V unimodular and D diagonal with divisibility chain.
/// U_inv and V_inv are maintained alongside (inverse transforms).
struct SmithDecomposition {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;
    std::vector<Int> diag;  // min(rows, cols) entries, d_i | d_{i+1}, d_i >= 0

    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Rank over Q (= number of nonzero invariant factors).
std::size_t int_rank(const IntMatrix& m);

/// coker(M) = Z^rows / column-span(M).
FinGenAbGroup cokernel(const IntMatrix& m);

std::size_t kernel_rank(const IntMatrix& m);
std::size_t kernel_rank(const RatMatrix& m);

/// Basis of the integer kernel lattice of M (columns of V past the rank).
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

/// Is v in the column span of M over Z?  If so and sol != nullptr, a solution
/// of M x = v is stored there.
bool in_column_span(const SmithDecomposition& snf, const std::vector<Int>& v,
                    std::vector<Int>* sol = nullptr);

}  // namespace sshk

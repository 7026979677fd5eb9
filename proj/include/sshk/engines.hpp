#pragma once

#include "sshk/modp.hpp"
#include "sshk/report.hpp"

namespace sshk {

/// adjacency[v][w] = number of edges w -> v; regular lists the vertices with
/// finitely many, and at least one, outgoing edge.
struct GraphInput {
    IntMatrix adjacency;
    std::vector<std::size_t> regular;
};

GradedReport graph_engine(const GraphInput& g, std::size_t max_degree);

/// Two integer matrices of the same shape; A a row-finite adjacency matrix and
/// B supported where A is.
struct KatsuraInput {
    IntMatrix A, B;
};

GradedReport katsura_engine(const KatsuraInput& k, std::size_t max_degree);

/// Matrix of the rationalized virtual endomorphism together with the alphabet
/// size d; homology comes from kernels/cokernels of id - d*Lambda^q(A).
struct FreeAbelianInput {
    RatMatrix A;
    Int d;
};

GradedReport free_abelian_engine(const FreeAbelianInput& f, bool with_checks);

/// Multispinal datum with A = Z/d and B = (Z/m)^k homocyclic: per element of
/// Z/d either an automorphism of B (k x k, invertible mod m) or a homomorphism
/// B -> A (1 x k mod-d row).
struct MultispinalInput {
    std::size_t d = 2;
    long m = 2;
    std::size_t k = 1;
    struct Entry {
        bool is_aut;
        IntMatrix mat;
    };
    std::vector<Entry> phi;  // indexed by 0..d-1

    std::vector<std::size_t> aut_positions() const;
};

/// Sum over the automorphism positions of the permutation action on the
/// m^k - 1 nontrivial characters of B (an automorphism acts on character
/// indices by its inverse transpose mod m).
IntMatrix multispinal_t_matrix(const MultispinalInput& in);

/// K_0 = Z/(d-1) + coker(id-T), K_1 = ker(id-T), unit class the generator of
/// the Z/(d-1) summand.
GradedReport multispinal_k_engine(const MultispinalInput& in);

/// Orbit count of the single declared automorphism on B \ {0}.
std::size_t sunic_orbit_count(const MultispinalInput& in);

/// coker and ker of id - sum of the given maps on a shared presentation of
/// some H_n(B, C); one homology degree of the multispinal scaffold.
struct ScaffoldPieces {
    FinGenAbGroup coker, ker;
};
ScaffoldPieces multispinal_h_scaffold(const std::vector<AbMap>& maps);

/// Homology of the GGS-type multispinal group over m letters assembled from
/// the scaffold: H_0 = Z/(m-1) and H_n = Z/m for n >= 1.
GradedReport ggs_report(long m, std::size_t max_degree);

/// Action of a 2x2 matrix over F_2 on the degree-n part of the mod-2 homology
/// of the Klein four-group, computed through the shuffle (Eilenberg-Zilber)
/// and Alexander-Whitney maps on the basis e_j (x) e_{n-j}.  Parallel over
/// shuffles; klein_mod2_serial is the reference implementation.
ModPMatrix klein_mod2(const ModPMatrix& phi, std::size_t n);
ModPMatrix klein_mod2_serial(const ModPMatrix& phi, std::size_t n);

/// Multiplicative order of a square matrix over F_p (small inputs only).
std::size_t mod_p_order(const ModPMatrix& m, std::size_t bound = 1000);

/// dim_F2 H_n for the Sunic group of a degree-2 companion matrix cf over F_2;
/// requires cf to have odd order.
std::size_t sunic_mod2_homology(const ModPMatrix& cf, std::size_t n);

/// Integral H_n for the Grigorchuk groupoid, computed by the binomial-matrix
/// route (all n) and cross-checked against the shuffle route for n <= 20.
FinGenAbGroup grigorchuk_homology(std::size_t n);

}  // namespace sshk

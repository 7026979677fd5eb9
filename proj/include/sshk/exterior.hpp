#pragma once

#include "sshk/matrix.hpp"

namespace sshk {

/// q-element subsets of {0,...,n-1} in lexicographic order; fixes the row and
/// column indexing of every exterior-power matrix.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t q);

/// Lambda^q(M) for square M: entry (I,J) = det of the submatrix with rows I,
/// columns J.  Lambda^0 is the 1x1 identity.  Minors are computed in parallel;
/// exterior_power_serial is the reference implementation.
RatMatrix exterior_power(const RatMatrix& m, std::size_t q);
RatMatrix exterior_power_serial(const RatMatrix& m, std::size_t q);

/// d*M when every entry of d*M is integral; otherwise IntegralityError naming
/// the first offending entry.
IntMatrix scale_and_certify_integral(const RatMatrix& m, const Int& d);

/// (n+1)x(n+1) matrix with entry (i,j) = (-1)^i * C(n-i, j); its cube is
/// (-1)^n * identity.
IntMatrix binomial_sign_matrix(std::size_t n);

/// Nullity of M - id over Q.  Agrees with the eigenvalue-1 multiplicity when M
/// has finite multiplicative order (the only intended use).
std::size_t eigenvalue_one_multiplicity(const RatMatrix& m);

}  // namespace sshk

#include "sshk/exterior.hpp"

#include "sshk/errors.hpp"

namespace sshk {

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t q) {
    std::vector<std::vector<std::size_t>> out;
    if (q > n) return out;
    std::vector<std::size_t> cur(q);
    for (std::size_t i = 0; i < q; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        if (q == 0) break;
        // advance to the next subset in lex order
        std::size_t i = q;
        while (i > 0 && cur[i - 1] == n - q + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

Rat minor_det(const RatMatrix& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
    std::size_t q = rows.size();
    RatMatrix sub(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
    return determinant(sub);
}

RatMatrix exterior_power_impl(const RatMatrix& m, std::size_t q, bool parallel) {
    if (m.rows != m.cols) throw InputError("exterior power of a non-square matrix");
    if (q > m.rows)
        throw InputError("exterior power degree " + std::to_string(q) +
                         " exceeds matrix size " + std::to_string(m.rows));
    auto subs = lex_subsets(m.rows, q);
    std::size_t k = subs.size();
    RatMatrix out(k, k);
    if (parallel) {
        // entries are independent; each thread owns disjoint slots
#pragma omp parallel for schedule(dynamic)
        for (long long idx = 0; idx < (long long)(k * k); ++idx) {
            std::size_t i = (std::size_t)idx / k, j = (std::size_t)idx % k;
            out.at(i, j) = minor_det(m, subs[i], subs[j]);
        }
    } else {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) out.at(i, j) = minor_det(m, subs[i], subs[j]);
    }
    return out;
}

}  // namespace

RatMatrix exterior_power(const RatMatrix& m, std::size_t q) {
    return exterior_power_impl(m, q, true);
}

RatMatrix exterior_power_serial(const RatMatrix& m, std::size_t q) {
    return exterior_power_impl(m, q, false);
}

IntMatrix scale_and_certify_integral(const RatMatrix& m, const Int& d) {
    IntMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            Rat v = d * m.at(i, j);
            v.canonicalize();
            if (v.get_den() != 1) throw IntegralityError(i, j, v.get_str());
            out.at(i, j) = v.get_num();
        }
    return out;
}

IntMatrix binomial_sign_matrix(std::size_t n) {
    IntMatrix a(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            if (j > n - i) continue;  // C(n-i, j) = 0
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), n - i, j);
            a.at(i, j) = (i % 2 == 0) ? c : -c;
        }
    return a;
}

std::size_t eigenvalue_one_multiplicity(const RatMatrix& m) {
    if (m.rows != m.cols) throw InputError("eigenvalue multiplicity of a non-square matrix");
    RatMatrix shifted = m - RatMatrix::identity(m.rows);
    return m.cols - shifted.rank();
}

}  // namespace sshk

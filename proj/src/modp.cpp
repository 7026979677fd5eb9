#include "sshk/modp.hpp"

#include "sshk/errors.hpp"

namespace sshk {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

ModPMatrix ModPMatrix::identity(long p, std::size_t n) {
    ModPMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ModPMatrix operator*(const ModPMatrix& a, const ModPMatrix& b) {
    if (a.p != b.p || a.cols != b.rows) throw InputError("mod-p product mismatch");
    ModPMatrix c(a.p, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            long aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % a.p;
        }
    return c;
}

ModPMatrix operator-(const ModPMatrix& a, const ModPMatrix& b) {
    if (a.p != b.p || a.rows != b.rows || a.cols != b.cols)
        throw InputError("mod-p difference mismatch");
    ModPMatrix c(a.p, a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i)
        c.data[i] = ((a.data[i] - b.data[i]) % a.p + a.p) % a.p;
    return c;
}

namespace {

long inv_mod(long a, long p) {
    // Fermat; p prime, a nonzero mod p
    long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t ModPMatrix::rank() const {
    ModPMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, j) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
        long inv = inv_mod(m.at(r, j), p);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, j) == 0) continue;
            long f = (p - m.at(i, j) * inv % p) % p;
            for (std::size_t k = j; k < m.cols; ++k)
                m.at(i, k) = (m.at(i, k) + f * m.at(r, k)) % p;
        }
        ++r;
    }
    return r;
}

ModPMatrix mod_p_reduce(const IntMatrix& m, long p) {
    if (!is_prime(Int(p))) throw InputError(std::to_string(p) + " is not prime");
    ModPMatrix out(p, m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), m.data[i].get_mpz_t(), (unsigned long)p);
        out.data[i] = r.get_si();
    }
    return out;
}

std::size_t rank_mod_p(const IntMatrix& m, long p) { return mod_p_reduce(m, p).rank(); }

std::size_t nullity_mod_p(const IntMatrix& m, long p) { return mod_p_reduce(m, p).nullity(); }

}  // namespace sshk

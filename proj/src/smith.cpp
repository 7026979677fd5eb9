#include "sshk/smith.hpp"

#include <algorithm>
#include <sstream>

#include "sshk/errors.hpp"

namespace sshk {

Int FinGenAbGroup::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

FinGenAbGroup FinGenAbGroup::cyclic(const Int& n) {
    Int a = abs(n);
    if (a == 0) return free_abelian(1);
    if (a == 1) return trivial();
    return {{a}, 0};
}

FinGenAbGroup FinGenAbGroup::from_diag(const std::vector<Int>& diag, std::size_t ambient_rank) {
    FinGenAbGroup g;
    std::size_t nonzero = 0;
    for (const auto& d : diag) {
        Int a = abs(d);
        if (a != 0) ++nonzero;
        if (a >= 2) g.torsion.push_back(a);
    }
    g.free_rank = ambient_rank - nonzero;
    return g;
}

FinGenAbGroup FinGenAbGroup::direct_sum(const FinGenAbGroup& other) const {
    std::vector<Int> factors = torsion;
    factors.insert(factors.end(), other.torsion.begin(), other.torsion.end());
    std::size_t n = factors.size();
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = factors[i];
    FinGenAbGroup g = FinGenAbGroup::from_diag(smith_normal_form(d).diag, n);
    g.free_rank += free_rank + other.free_rank;
    return g;
}

std::string FinGenAbGroup::render() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << " + ";
        os << s;
        first = false;
    };
    if (free_rank == 1) emit("Z");
    else if (free_rank > 1) emit("Z^" + std::to_string(free_rank));
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::string base = "Z/" + torsion[i].get_str();
        if (j - i == 1) emit(base);
        else emit("(" + base + ")^" + std::to_string(j - i));
        i = j;
    }
    return os.str();
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const auto& d : diag)
        if (d != 0) ++r;
    return r;
}

namespace {

// Quotient minimizing |a - q*b| (b != 0).
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += (r > 0) == (b > 0) ? 1 : -1;
    return q;
}

struct Worker {
    IntMatrix M, U, V, Uinv, Vinv;

    explicit Worker(const IntMatrix& m)
        : M(m),
          U(IntMatrix::identity(m.rows)),
          V(IntMatrix::identity(m.cols)),
          Uinv(IntMatrix::identity(m.rows)),
          Vinv(IntMatrix::identity(m.cols)) {}

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(i, j), M.at(k, j));
        for (std::size_t j = 0; j < U.cols; ++j) std::swap(U.at(i, j), U.at(k, j));
        for (std::size_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, k));
    }
    void swap_cols(std::size_t j, std::size_t l) {
        if (j == l) return;
        for (std::size_t i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, l));
        for (std::size_t i = 0; i < V.rows; ++i) std::swap(V.at(i, j), V.at(i, l));
        for (std::size_t c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(j, c), Vinv.at(l, c));
    }
    // row_i += f * row_k
    void add_row(std::size_t i, std::size_t k, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < M.cols; ++j) M.at(i, j) += f * M.at(k, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(i, j) += f * U.at(k, j);
        for (std::size_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, k) -= f * Uinv.at(r, i);
    }
    // col_j += f * col_l
    void add_col(std::size_t j, std::size_t l, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < M.rows; ++i) M.at(i, j) += f * M.at(i, l);
        for (std::size_t i = 0; i < V.rows; ++i) V.at(i, j) += f * V.at(i, l);
        for (std::size_t c = 0; c < Vinv.cols; ++c) Vinv.at(l, c) -= f * Vinv.at(j, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < M.cols; ++j) M.at(i, j) = -M.at(i, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
        for (std::size_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }

    // Minimal-|entry| pivot in the trailing submatrix; false if all zero.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < M.rows; ++i)
            for (std::size_t j = t; j < M.cols; ++j) {
                const Int& e = M.at(i, j);
                if (e == 0) continue;
                Int a = abs(e);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        std::size_t n = std::min(M.rows, M.cols);
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                // Clear column t and row t against the pivot.
                bool clean = true;
                for (std::size_t i = t + 1; i < M.rows; ++i) {
                    if (M.at(i, t) == 0) continue;
                    add_row(i, t, -nearest_quotient(M.at(i, t), M.at(t, t)));
                    if (M.at(i, t) != 0) {
                        swap_rows(t, i);  // strictly smaller pivot
                        clean = false;
                    }
                }
                if (!clean) continue;
                for (std::size_t j = t + 1; j < M.cols; ++j) {
                    if (M.at(t, j) == 0) continue;
                    add_col(j, t, -nearest_quotient(M.at(t, j), M.at(t, t)));
                    if (M.at(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (!clean) continue;
                // Pivot must divide the rest of the submatrix for the chain.
                bool divides = true;
                for (std::size_t i = t + 1; i < M.rows && divides; ++i)
                    for (std::size_t j = t + 1; j < M.cols && divides; ++j)
                        if (!mpz_divisible_p(M.at(i, j).get_mpz_t(), M.at(t, t).get_mpz_t())) {
                            add_row(t, i, 1);
                            divides = false;
                        }
                if (divides) break;
            }
            if (M.at(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    w.run();
    SmithDecomposition snf;
    snf.U = std::move(w.U);
    snf.V = std::move(w.V);
    snf.U_inv = std::move(w.Uinv);
    snf.V_inv = std::move(w.Vinv);
    snf.D = std::move(w.M);
    std::size_t n = std::min(m.rows, m.cols);
    snf.diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) snf.diag.push_back(snf.D.at(i, i));
    return snf;
}

std::size_t int_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

FinGenAbGroup cokernel(const IntMatrix& m) {
    return FinGenAbGroup::from_diag(smith_normal_form(m).diag, m.rows);
}

std::size_t kernel_rank(const IntMatrix& m) { return m.cols - int_rank(m); }

std::size_t kernel_rank(const RatMatrix& m) { return m.cols - m.rank(); }

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::size_t r = snf.rank();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r; j < m.cols; ++j) {
        std::vector<Int> v(m.cols);
        for (std::size_t i = 0; i < m.cols; ++i) v[i] = snf.V.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_column_span(const SmithDecomposition& snf, const std::vector<Int>& v,
                    std::vector<Int>* sol) {
    std::size_t rows = snf.U.rows, cols = snf.V.rows;
    if (v.size() != rows) throw InputError("in_column_span: vector length mismatch");
    std::vector<Int> w(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) w[i] += snf.U.at(i, j) * v[j];
    std::vector<Int> y(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < snf.diag.size() && snf.diag[i] != 0) {
            if (!mpz_divisible_p(w[i].get_mpz_t(), snf.diag[i].get_mpz_t())) return false;
            y[i] = w[i] / snf.diag[i];
        } else if (w[i] != 0) {
            return false;
        }
    }
    if (sol) {
        sol->assign(cols, 0);
        for (std::size_t i = 0; i < cols; ++i)
            for (std::size_t j = 0; j < cols; ++j) (*sol)[i] += snf.V.at(i, j) * y[j];
    }
    return true;
}

}  // namespace sshk

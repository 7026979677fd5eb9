#include "sshk/abelian.hpp"

#include <set>

#include "sshk/errors.hpp"

namespace sshk {

AbPresentation AbPresentation::from_invariants(const std::vector<Int>& invariants) {
    std::size_t g = invariants.size();
    IntMatrix r(g, 0);
    std::vector<std::size_t> torsion_idx;
    for (std::size_t i = 0; i < g; ++i)
        if (invariants[i] != 0) torsion_idx.push_back(i);
    r = IntMatrix(g, torsion_idx.size());
    for (std::size_t j = 0; j < torsion_idx.size(); ++j)
        r.at(torsion_idx[j], j) = abs(invariants[torsion_idx[j]]);
    return {g, r};
}

FinGenAbGroup AbPresentation::group() const {
    return FinGenAbGroup::from_diag(smith_normal_form(relations).diag, generators);
}

std::optional<std::size_t> abmap_check(const AbMap& m) {
    if (m.matrix.rows != m.target.generators || m.matrix.cols != m.source.generators)
        throw InputError("abmap matrix dimensions do not match presentations");
    SmithDecomposition snf_t = smith_normal_form(m.target.relations);
    IntMatrix mapped = m.matrix * m.source.relations;
    for (std::size_t j = 0; j < mapped.cols; ++j) {
        std::vector<Int> col(mapped.rows);
        for (std::size_t i = 0; i < mapped.rows; ++i) col[i] = mapped.at(i, j);
        if (!in_column_span(snf_t, col)) return j;
    }
    return std::nullopt;
}

FinGenAbGroup abmap_cokernel(const AbMap& m) {
    if (auto bad = abmap_check(m))
        throw PreconditionError("ill-defined map: relator " + std::to_string(*bad) +
                                " is not respected");
    return cokernel(hconcat(m.matrix, m.target.relations));
}

FinGenAbGroup abmap_kernel(const AbMap& m) {
    if (auto bad = abmap_check(m))
        throw PreconditionError("ill-defined map: relator " + std::to_string(*bad) +
                                " is not respected");
    std::size_t gs = m.source.generators;
    // Lattice L = { x : matrix*x in colspan(R_target) }, as the projection of
    // the integer kernel of [matrix | R_target] onto the x-coordinates.
    IntMatrix block = hconcat(m.matrix, m.target.relations);
    auto kb = kernel_basis(block);
    IntMatrix gen(gs, kb.size());
    for (std::size_t j = 0; j < kb.size(); ++j)
        for (std::size_t i = 0; i < gs; ++i) gen.at(i, j) = kb[j][i];
    SmithDecomposition snf_l = smith_normal_form(gen);
    std::size_t rho = snf_l.rank();
    // Basis of L: b_i = d_i * (column i of U^{-1}); express each source relator
    // in these coordinates and quotient.
    const IntMatrix& rs = m.source.relations;
    IntMatrix coeff(rho, rs.cols);
    for (std::size_t j = 0; j < rs.cols; ++j) {
        std::vector<Int> w(gs);
        for (std::size_t i = 0; i < gs; ++i)
            for (std::size_t k = 0; k < gs; ++k) w[i] += snf_l.U.at(i, k) * rs.at(k, j);
        for (std::size_t i = 0; i < gs; ++i) {
            if (i < rho) {
                if (!mpz_divisible_p(w[i].get_mpz_t(), snf_l.diag[i].get_mpz_t()))
                    throw PreconditionError("internal: source relator escapes kernel lattice");
                coeff.at(i, j) = w[i] / snf_l.diag[i];
            } else if (w[i] != 0) {
                throw PreconditionError("internal: source relator escapes kernel lattice");
            }
        }
    }
    return FinGenAbGroup::from_diag(smith_normal_form(coeff).diag, rho);
}

Int abmap_image_order(const AbMap& m) {
    SmithDecomposition snf_s = smith_normal_form(m.source.relations);
    SmithDecomposition snf_t = smith_normal_form(m.target.relations);
    std::size_t gs = m.source.generators, gt = m.target.generators;
    std::vector<Int> mod_s(gs, 0), mod_t(gt, 0);
    for (std::size_t i = 0; i < snf_s.diag.size(); ++i) mod_s[i] = abs(snf_s.diag[i]);
    for (std::size_t i = 0; i < snf_t.diag.size(); ++i) mod_t[i] = abs(snf_t.diag[i]);
    for (const auto& d : mod_s)
        if (d == 0) throw PreconditionError("abmap_image_order needs a finite source");
    std::set<std::vector<Int>> image;
    std::vector<Int> z(gs, 0);
    for (;;) {
        // x = U_s^{-1} z, y = matrix * x, canonical form U_t y mod d.
        std::vector<Int> x(gs, 0), y(gt, 0), canon(gt, 0);
        for (std::size_t i = 0; i < gs; ++i)
            for (std::size_t k = 0; k < gs; ++k) x[i] += snf_s.U_inv.at(i, k) * z[k];
        for (std::size_t i = 0; i < gt; ++i)
            for (std::size_t k = 0; k < gs; ++k) y[i] += m.matrix.at(i, k) * x[k];
        for (std::size_t i = 0; i < gt; ++i) {
            Int w = 0;
            for (std::size_t k = 0; k < gt; ++k) w += snf_t.U.at(i, k) * y[k];
            if (mod_t[i] != 0) mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), mod_t[i].get_mpz_t());
            canon[i] = w;
        }
        image.insert(canon);
        // next tuple
        std::size_t i = 0;
        while (i < gs) {
            z[i] += 1;
            if (z[i] < mod_s[i]) break;
            z[i] = 0;
            ++i;
        }
        if (i == gs) break;
    }
    return Int(image.size());
}

std::string ExtensionResult::render() const {
    if (resolved) return resolved->render();
    return "extension of " + quot.render() + " by " + sub.render() + " (undetermined)";
}

ExtensionResult splice_extension(FinGenAbGroup sub, FinGenAbGroup quot) {
    ExtensionResult r{sub, quot, std::nullopt};
    if (sub.is_trivial()) r.resolved = quot;
    else if (quot.is_trivial()) r.resolved = sub;
    else if (quot.is_free()) r.resolved = sub.direct_sum(quot);
    return r;
}

}  // namespace sshk

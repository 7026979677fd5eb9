#include "sshk/reference.hpp"

#include <numeric>

#include "sshk/errors.hpp"
#include "sshk/modp.hpp"

namespace sshk {

namespace {

constexpr const char* kClosed = "closed form";
constexpr const char* kRefOnly = "closed form (reference-only)";

FinGenAbGroup power(const FinGenAbGroup& g, std::size_t k) {
    FinGenAbGroup out;
    for (std::size_t i = 0; i < k; ++i) out = out.direct_sum(g);
    return out;
}

void require_params(const FamilySpec& f, std::size_t n) {
    if (f.params.size() != n)
        throw InputError(f.family + " takes " + std::to_string(n) + " parameter(s), got " +
                         std::to_string(f.params.size()));
}

std::string unit_of(const FinGenAbGroup& g) {
    return g.is_trivial() ? "0" : "generator of the " + g.render() + " summand";
}

GradedReport grigorchuk_form(std::size_t max_degree) {
    GradedReport rep;
    rep.set(0, FinGenAbGroup::trivial(), kClosed);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        std::size_t r = n % 3 == 0 ? n / 3 + 1 : (n % 3 == 1 ? (n - 1) / 3 : (n + 1) / 3);
        rep.set(n, power(FinGenAbGroup::cyclic(2), r), kClosed);
    }
    KTheoryPair k;
    k.k0 = splice_extension(FinGenAbGroup::free_abelian(1), FinGenAbGroup::trivial());
    k.k1 = splice_extension(FinGenAbGroup::free_abelian(1), FinGenAbGroup::trivial());
    k.unit_class = "0";
    k.provenance = kClosed;
    rep.k_theory = std::move(k);
    return rep;
}

GradedReport grigorchuk_erschler_form(std::size_t max_degree) {
    GradedReport rep;
    // integral homology has no engine route here; the engines only serve the
    // mod-2 dimensions dim H_n = n + 1
    rep.set(0, FinGenAbGroup::trivial(), kRefOnly);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        FinGenAbGroup h;
        if (n % 2 == 0)
            h = power(FinGenAbGroup::cyclic(2), n / 2 + 1);
        else if (n % 4 == 1)
            h = power(FinGenAbGroup::cyclic(2), (n + 1) / 2);
        else
            h = power(FinGenAbGroup::cyclic(2), (n - 1) / 2).direct_sum(FinGenAbGroup::cyclic(4));
        rep.set(n, std::move(h), kRefOnly);
    }
    KTheoryPair k;
    k.k0 = splice_extension(FinGenAbGroup::free_abelian(2), FinGenAbGroup::trivial());
    k.k1 = splice_extension(FinGenAbGroup::free_abelian(2), FinGenAbGroup::trivial());
    k.unit_class = "0";
    k.provenance = kClosed;
    rep.k_theory = std::move(k);
    return rep;
}

GradedReport ggs_form(long m, std::size_t max_degree) {
    if (m < 2) throw PreconditionError("ggs requires m >= 2");
    GradedReport rep;
    rep.set(0, FinGenAbGroup::cyclic(m - 1), kClosed);
    for (std::size_t n = 1; n <= max_degree; ++n)
        rep.set(n, FinGenAbGroup::cyclic(m), kClosed);
    FinGenAbGroup unit_part = FinGenAbGroup::cyclic(m - 1);
    KTheoryPair k;
    k.k0 = splice_extension(
        unit_part.direct_sum(FinGenAbGroup::free_abelian(std::size_t(m) - 1)),
        FinGenAbGroup::trivial());
    k.k1 = splice_extension(FinGenAbGroup::free_abelian(std::size_t(m) - 1),
                            FinGenAbGroup::trivial());
    k.unit_class = unit_of(unit_part);
    k.provenance = kClosed;
    rep.k_theory = std::move(k);
    return rep;
}

GradedReport sunic_primitive_form(long p, long deg) {
    bool known = (p == 2 && (deg == 2 || deg == 3)) || (p == 3 && deg == 1);
    if (!known)
        throw PreconditionError(
            "sunic_primitive requires a primitive companion polynomial; implemented cases are "
            "(p, deg) in {(2,2), (2,3), (3,1)}");
    GradedReport rep;
    FinGenAbGroup unit_part = FinGenAbGroup::cyclic(p - 1);
    KTheoryPair k;
    k.k0 = splice_extension(unit_part.direct_sum(FinGenAbGroup::free_abelian(1)),
                            FinGenAbGroup::trivial());
    k.k1 = splice_extension(FinGenAbGroup::free_abelian(1), FinGenAbGroup::trivial());
    k.unit_class = unit_of(unit_part);
    k.provenance = kClosed;
    rep.k_theory = std::move(k);
    rep.flags.push_back("integral homology is not tabulated for this family; the mod-2 "
                        "dimensions are available through the homology engines");
    return rep;
}

GradedReport hanoi_form(std::size_t max_degree) {
    GradedReport rep;
    rep.set(0, FinGenAbGroup::cyclic(2), kClosed);
    for (std::size_t n = 1; n <= max_degree; ++n)
        rep.set(n, power(FinGenAbGroup::cyclic(2), 3), kRefOnly);
    KTheoryPair k;
    k.k0 = splice_extension(FinGenAbGroup::free_abelian(3), FinGenAbGroup::trivial());
    k.k1 = splice_extension(FinGenAbGroup::free_abelian(3), FinGenAbGroup::trivial());
    k.unit_class = "0";
    k.provenance = kRefOnly;
    rep.k_theory = std::move(k);
    return rep;
}

GradedReport aleshin_form(std::size_t max_degree) {
    GradedReport rep;
    for (std::size_t n = 0; n <= max_degree; ++n)
        rep.set(n, n == 1 ? FinGenAbGroup::cyclic(2) : FinGenAbGroup::trivial(), kClosed);
    KTheoryPair k;
    k.k0 = splice_extension(FinGenAbGroup::trivial(), FinGenAbGroup::trivial());
    k.k1 = splice_extension(FinGenAbGroup::cyclic(2), FinGenAbGroup::trivial());
    k.unit_class = "0";
    k.provenance = kClosed;
    rep.k_theory = std::move(k);
    return rep;
}

GradedReport lamplighter_form(long a, std::size_t max_degree) {
    if (a < 2) throw PreconditionError("lamplighter requires a finite abelian group of order >= 2");
    GradedReport rep;
    FinGenAbGroup h = FinGenAbGroup::cyclic(a - 1);
    rep.set(0, h, kRefOnly);
    if (max_degree >= 1) rep.set(1, h, kRefOnly);
    for (std::size_t n = 2; n <= max_degree; ++n)
        rep.set(n, FinGenAbGroup::trivial(), kRefOnly);
    // homology vanishes above degree 1, so K-theory is the even/odd sum
    KTheoryPair k;
    k.k0 = splice_extension(h, FinGenAbGroup::trivial());
    k.k1 = splice_extension(h, FinGenAbGroup::trivial());
    k.provenance = kRefOnly;
    rep.k_theory = std::move(k);
    return rep;
}

GradedReport baumslag_solitar_form(long m, long n, std::size_t max_degree) {
    if (m < 2 || n < 2) throw PreconditionError("baumslag_solitar requires m, n >= 2");
    if (std::gcd(m, n) != 1) throw PreconditionError("baumslag_solitar requires gcd(m, n) = 1");
    GradedReport rep;
    FinGenAbGroup zm = FinGenAbGroup::cyclic(m - 1);
    FinGenAbGroup zn = FinGenAbGroup::cyclic(n - 1);
    rep.set(0, zn, kRefOnly);
    if (max_degree >= 1) rep.set(1, zm.direct_sum(zn), kRefOnly);
    if (max_degree >= 2) rep.set(2, zm, kRefOnly);
    for (std::size_t q = 3; q <= max_degree; ++q)
        rep.set(q, FinGenAbGroup::trivial(), kRefOnly);
    KTheoryPair k;
    // 0 -> Z/(n-1) -> K_0 -> Z/(m-1) -> 0; no general splitting is known
    k.k0 = splice_extension(zn, zm);
    k.k1 = splice_extension(zm.direct_sum(zn), FinGenAbGroup::trivial());
    k.provenance = kRefOnly;
    rep.k_theory = std::move(k);
    if (!rep.k_theory->k0.resolved)
        rep.flags.push_back("K_0 extension left undetermined");
    return rep;
}

GradedReport sausage_form(long n, std::size_t max_degree) {
    if (n < 2 || !is_prime(Int(n))) throw PreconditionError("sausage requires a prime rank n");
    std::size_t un = std::size_t(n);
    auto degree_group = [&](std::size_t q) -> FinGenAbGroup {
        if (q == 0 || q > un + 1) return FinGenAbGroup::trivial();
        if (q == un) return FinGenAbGroup::cyclic(n % 2 == 0 ? 2 : 0);
        if (q == un + 1)
            return n % 2 == 1 ? FinGenAbGroup::free_abelian(1) : FinGenAbGroup::trivial();
        Int order = (Int(1) << (un - q)) - 1;
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), un, q);
        Int mult = binom / n;
        return power(FinGenAbGroup::cyclic(order), mult.get_ui());
    };
    GradedReport rep;
    for (std::size_t q = 0; q <= max_degree; ++q) rep.set(q, degree_group(q), kClosed);
    FinGenAbGroup k0, k1;
    for (std::size_t q = 0; q <= un + 1; ++q) {
        if (q % 2 == 0)
            k0 = k0.direct_sum(degree_group(q));
        else
            k1 = k1.direct_sum(degree_group(q));
    }
    KTheoryPair k;
    k.k0 = splice_extension(std::move(k0), FinGenAbGroup::trivial());
    k.k1 = splice_extension(std::move(k1), FinGenAbGroup::trivial());
    k.unit_class = "0";  // coker(1 - d) with d = 2 is trivial
    k.provenance = kClosed;
    rep.k_theory = std::move(k);
    return rep;
}

}  // namespace

GradedReport closed_form(const FamilySpec& f, std::size_t max_degree) {
    if (f.family == "grigorchuk") {
        require_params(f, 0);
        return grigorchuk_form(max_degree);
    }
    if (f.family == "grigorchuk_erschler") {
        require_params(f, 0);
        return grigorchuk_erschler_form(max_degree);
    }
    if (f.family == "ggs") {
        require_params(f, 1);
        return ggs_form(f.params[0], max_degree);
    }
    if (f.family == "sunic_primitive") {
        require_params(f, 2);
        return sunic_primitive_form(f.params[0], f.params[1]);
    }
    if (f.family == "hanoi") {
        require_params(f, 0);
        return hanoi_form(max_degree);
    }
    if (f.family == "aleshin") {
        require_params(f, 0);
        return aleshin_form(max_degree);
    }
    if (f.family == "lamplighter") {
        require_params(f, 1);
        return lamplighter_form(f.params[0], max_degree);
    }
    if (f.family == "baumslag_solitar") {
        require_params(f, 2);
        return baumslag_solitar_form(f.params[0], f.params[1], max_degree);
    }
    if (f.family == "sausage") {
        require_params(f, 1);
        return sausage_form(f.params[0], max_degree);
    }
    if (f.family == "graph" || f.family == "katsura")
        throw InputError(f.family + " has no closed-form table; supply an input document of that kind");
    throw InputError("unknown family: " + f.family);
}

}  // namespace sshk

#ifndef FFC_SPLITTING_HPP
#define FFC_SPLITTING_HPP

#include "ffc/cover.hpp"

namespace ffc {

/// Everything the theorems consume about one place P of K: ramification
/// index e, residue degree f, the decomposition group D, the inertia group I
/// and the Frobenius coset (Q,M/K), stored as explicit element sets. For
/// abelian G this data does not depend on the choice of the place Q above P.
struct FrobeniusData {
    explicit FrobeniusData(Place place) : P(std::move(place)) {}

    Place P;
    u64 e = 1;
    u64 f = 1;
    u64 num_places_above = 1;
    u64 deg_Q = 1;           // deg_k(Q) = deg_k(P) * f
    std::vector<u64> I;      // sorted element sets
    std::vector<u64> D;
    std::vector<u64> coset;  // (Q, M/K), a coset of I inside D
};

/// Closed-form splitting data at P.
///
/// Kummer block (all components jointly): with v_i = v_P(f_i) and unit values
/// u_i = (f_i pi^{-v_i})(P), the inertia group is generated by the element
/// with exponents (v_i mod n_i) and the Frobenius coset is chi * I where
/// chi has exponents given by the power residue characters u_i^{(q_P-1)/n_i}.
/// Artin-Schreier block: the pole-free tuple space U of the local classes of
/// sum t_j f_j gives I = U^perp, and the coset solves <t, b> = Tr(c_t) over U.
/// Constant components contribute the fixed coordinate deg(P) mod m.
/// The blocks multiply: I = I_tame x I_wild x 0 and the coset is the product
/// of the block cosets (sizes match because ramification indices multiply).
inline FrobeniusData splitting_data(const Cover& cov, const Place& P) {
    const FieldPtr& F = cov.F;
    const u32 rank = cov.G.rank();
    auto kum = cov.kummer_components();
    auto ass = cov.as_components();
    auto cst = cov.constant_components();

    u128 qP128 = 1;
    for (u32 i = 0; i < P.degree(); ++i) {
        qP128 *= F->q;
        if (qP128 > (u128(1) << 62))
            throw error(errc::enumeration_too_large, "residue field too large");
    }
    const u64 qP = u64(qP128);

    std::vector<u32> gen_pi(rank, 0), chi(rank, 0);
    for (size_t i : kum) {
        const auto& c = cov.comps[i];
        LocalView lv = local_view(c.f, P);
        long long v = lv.val();
        gen_pi[i] = u32(((v % (long long)c.n) + (long long)c.n) % (long long)c.n);
        Poly u = unit_part_residue(lv);
        Poly chi_rep = poly_powmod(u, (qP - 1) / c.n, lv.pi);
        if (chi_rep.degree() > 0)
            throw error(errc::internal, "power residue character not constant");
        Fe chi_val = chi_rep.is_zero() ? Fe::zero(F) : chi_rep.coeff(0);
        chi[i] = u32(detail::dlog_in_cyclic(chi_val, root_of_unity(F, c.n), c.n));
    }

    // artin-schreier block: local classes of all F_p-combinations
    const u32 p = F->p;
    std::vector<std::vector<u32>> U;     // pole-free tuples
    std::vector<u32> Utr;                // their constant-term traces
    u64 as_tuples = 1;
    for (size_t i = 0; i < ass.size(); ++i) as_tuples *= p;
    for (u64 code = 0; code < as_tuples; ++code) {
        u64 cc = code;
        std::vector<u32> t(ass.size());
        for (size_t i = 0; i < ass.size(); ++i) {
            t[i] = u32(cc % p);
            cc /= p;
        }
        RationalFunction g = RationalFunction::zero(F);
        for (size_t i = 0; i < ass.size(); ++i)
            for (u32 rep = 0; rep < t[i]; ++rep) g = g + cov.comps[ass[i]].f;
        auto cls = local_as_class(g, P);
        if (cls.pole_free) {
            U.push_back(t);
            Utr.push_back(cls.trace);
        }
    }
    std::vector<std::vector<u32>> Iw, cosetw;
    for (u64 code = 0; code < as_tuples; ++code) {
        u64 cc = code;
        std::vector<u32> b(ass.size());
        for (size_t i = 0; i < ass.size(); ++i) {
            b[i] = u32(cc % p);
            cc /= p;
        }
        bool in_I = true, in_coset = true;
        for (size_t u = 0; u < U.size(); ++u) {
            u64 dot = 0;
            for (size_t i = 0; i < ass.size(); ++i) dot += u64(U[u][i]) * b[i];
            if (dot % p != 0) in_I = false;
            if (dot % p != Utr[u]) in_coset = false;
        }
        if (in_I) Iw.push_back(b);
        if (in_coset) cosetw.push_back(b);
    }
    if (cosetw.empty()) throw error(errc::internal, "wild Frobenius coset empty");

    // assemble block data inside G
    auto to_elt = [&](const std::vector<u32>& base, const std::vector<u32>* as_part,
                      bool with_const) {
        std::vector<u32> e(base);
        if (as_part)
            for (size_t i = 0; i < ass.size(); ++i) e[ass[i]] = (*as_part)[i];
        if (with_const)
            for (size_t i : cst) e[i] = u32(P.degree() % cov.comps[i].n);
        return cov.G.encode(e);
    };

    std::vector<u64> Igens;
    {
        std::vector<u32> zero(rank, 0);
        std::vector<u32> gp(zero);
        for (size_t i : kum) gp[i] = gen_pi[i];
        Igens.push_back(cov.G.encode(gp));
        for (auto& b : Iw) Igens.push_back(to_elt(zero, &b, false));
    }
    FrobeniusData out(P);
    out.I = cov.G.closure(Igens);
    std::vector<u32> base(rank, 0);
    for (size_t i : kum) base[i] = chi[i];
    u64 b0 = to_elt(base, &cosetw.front(), true);
    out.coset = cov.G.coset(b0, out.I);
    std::vector<u64> dgens = Igens;
    dgens.push_back(b0);
    out.D = cov.G.closure(dgens);
    out.e = out.I.size();
    out.f = out.D.size() / out.I.size();
    out.num_places_above = cov.G.size() / out.D.size();
    out.deg_Q = u64(P.degree()) * out.f;

    // structural checks: the exact sequence sizes and I inside N
    if (out.coset.size() != out.e)
        throw error(errc::internal, "Frobenius coset has wrong size");
    for (u64 g : out.I)
        if (cov.frob_index[g] != 0)
            throw error(errc::internal, "inertia acts on the constant field");
    return out;
}

} // namespace ffc

#endif

#ifndef FFC_ORACLE_HPP
#define FFC_ORACLE_HPP

#include <map>

#include "ffc/splitting.hpp"

namespace ffc {

/// One place Q of M above P as seen by the brute-force oracle: a Frobenius
/// orbit of points on a local model, with the group data read off by matching
/// the arithmetic Frobenius action against group elements.
struct OrbitData {
    u64 orbit_size;          // residue degree over k_P
    u64 deg_Q;               // = deg P * orbit_size
    std::vector<u64> coset;  // elements g with g(alpha) = alpha^{q_P} at the point
    std::vector<u64> point;  // canonical representative (encoded coordinates)
};

struct OracleData {
    explicit OracleData(Place place) : P(std::move(place)) {}
    Place P;
    std::vector<u64> I; // point-level inertia: elements acting trivially on residues
    std::vector<OrbitData> places;
    u64 e = 1, f = 1, num_places_above = 1, deg_Q = 1;
    std::vector<u64> D;
};

/// Independent brute-force splitting oracle.
///
/// The fiber above P is enumerated on an explicit local model: for the tame
/// block, unit coordinates W_u = prod y_i^{u_i} pi^{-m_u} attached to a
/// generating set of the unramified exponent lattice U (with multiplicative
/// relation filtering, so partially ramified and composite fibers stay
/// consistent); for the wild block, shifted coordinates T with wp(T) equal to
/// the locally reduced combination; constant components contribute roots of a
/// fixed irreducible. Points are bucketed into orbits of the arithmetic
/// Frobenius x -> x^{q^{deg P}}, one orbit per place of M above P, and group
/// elements are matched pointwise: g lies in the Frobenius coset of the orbit
/// iff g(alpha) = alpha^{q_P} at a representative for every coordinate alpha.
/// Everything runs in a single splitting field L found by factoring the
/// coordinate equations over the residue field.
inline OracleData places_above_oracle(const Cover& cov, const Place& P, u64 max_enum = 10000000) {
    const FieldPtr& F = cov.F;
    const u32 p = F->p;
    const u32 d = P.degree();
    auto kum = cov.kummer_components();
    auto ass = cov.as_components();
    auto cst = cov.constant_components();

    u64 qP = 1;
    for (u32 i = 0; i < d; ++i) qP *= F->q;

    // chart: functions and uniformizer of the local model
    Poly pi_chart = P.is_infinity() ? Poly::x(F) : P.pi();
    auto chart = [&](const RationalFunction& g) {
        return P.is_infinity() ? g.infinity_chart() : g;
    };

    // ---- tame block: lattice U of unramified exponent tuples ----
    u64 nstar = 1;
    for (size_t i : kum) nstar = std::lcm(nstar, cov.comps[i].n);
    std::vector<long long> vals;
    for (size_t i : kum) vals.push_back(valuation_nonzero(cov.comps[i].f, P));

    std::vector<u32> kum_orders;
    for (size_t i : kum) kum_orders.push_back(u32(cov.comps[i].n));
    AbelianGroup Gk(kum_orders.empty() ? std::vector<u32>{1} : kum_orders);
    std::vector<u64> U;
    for (u64 t = 0; t < Gk.size(); ++t) {
        auto e = Gk.decode(t);
        long long s = 0;
        for (size_t i = 0; i < kum.size(); ++i)
            s += (long long)e[i] * vals[i] * (long long)(nstar / cov.comps[kum[i]].n);
        if (kum.empty() || s % (long long)nstar == 0) U.push_back(t);
    }
    if (kum.empty()) U = {0};
    // greedy generating set of U, plus relation lattice for filtering
    std::vector<u64> gens;
    {
        std::vector<u64> closure{0};
        for (u64 u : U) {
            if (set_contains(closure, u)) continue;
            gens.push_back(u);
            std::vector<u64> cl = Gk.closure(gens);
            closure = std::move(cl);
        }
    }
    std::vector<u64> gen_ord;
    for (u64 g : gens) gen_ord.push_back(Gk.order_of(g));

    // m_u = (sum u_i v_i (n*/n_i)) / n*
    auto m_of = [&](const std::vector<u32>& e) {
        long long s = 0;
        for (size_t i = 0; i < kum.size(); ++i)
            s += (long long)e[i] * vals[i] * (long long)(nstar / cov.comps[kum[i]].n);
        return s / (long long)nstar;
    };
    // exact unit prod f_i^{E_i/n_i} * pi^{-m} in chart coordinates, where the
    // integer tuple E is componentwise divisible by n_i
    auto unit_for = [&](const std::vector<long long>& E, long long m) {
        RationalFunction u(Poly::one(F));
        for (size_t i = 0; i < kum.size(); ++i)
            u = u * chart(cov.comps[kum[i]].f).pow(E[i] / (long long)cov.comps[kum[i]].n);
        u = u * RationalFunction(pi_chart).pow(-m);
        return u;
    };
    std::vector<RationalFunction> gen_unit; // W_j^{ord_j} = gen_unit_j
    for (size_t j = 0; j < gens.size(); ++j) {
        auto e = Gk.decode(gens[j]);
        std::vector<long long> E(kum.size());
        for (size_t i = 0; i < kum.size(); ++i) E[i] = (long long)e[i] * gen_ord[j];
        gen_unit.push_back(unit_for(E, m_of(e) * (long long)gen_ord[j]));
    }
    // relations among the generators and their consistency units
    std::vector<std::pair<std::vector<u32>, RationalFunction>> relations;
    {
        u64 total = 1;
        for (u64 o : gen_ord) {
            total *= o;
            if (total > max_enum) throw error(errc::enumeration_too_large, "relation lattice");
        }
        for (u64 code = 0; code < total; ++code) {
            u64 cc = code;
            std::vector<u32> lam(gens.size());
            for (size_t j = 0; j < gens.size(); ++j) {
                lam[j] = u32(cc % gen_ord[j]);
                cc /= gen_ord[j];
            }
            if (code == 0) continue;
            // sum lam_j gens_j in prod Z/n_i
            std::vector<long long> E(kum.size(), 0);
            for (size_t j = 0; j < gens.size(); ++j) {
                auto e = Gk.decode(gens[j]);
                for (size_t i = 0; i < kum.size(); ++i) E[i] += (long long)lam[j] * e[i];
            }
            bool is_relation = true;
            for (size_t i = 0; i < kum.size(); ++i)
                if (E[i] % (long long)cov.comps[kum[i]].n != 0) is_relation = false;
            if (!is_relation) continue;
            long long m = 0;
            for (size_t j = 0; j < gens.size(); ++j) {
                auto e = Gk.decode(gens[j]);
                m += (long long)lam[j] * m_of(e);
            }
            relations.emplace_back(lam, unit_for(E, m));
        }
    }

    // ---- wild block: basis of the pole-free tuple space ----
    std::vector<std::vector<u32>> as_basis;
    std::vector<RationalFunction> as_reduced; // chart-side reduced functions
    u64 pole_free_count = 0;
    {
        u64 as_tuples = 1;
        for (size_t i = 0; i < ass.size(); ++i) as_tuples *= p;
        std::vector<std::vector<u32>> span{std::vector<u32>(ass.size(), 0)};
        for (u64 code = 1; code < as_tuples; ++code) {
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
            if (!cls.pole_free) continue;
            ++pole_free_count;
            bool in_span = false;
            for (auto& s : span)
                if (s == t) in_span = true;
            if (in_span) continue;
            as_basis.push_back(t);
            as_reduced.push_back(cls.reduced_chart);
            // extend span
            std::vector<std::vector<u32>> bigger;
            for (auto& s : span)
                for (u32 c = 0; c < p; ++c) {
                    std::vector<u32> w(s);
                    for (size_t i = 0; i < ass.size(); ++i) w[i] = (w[i] + c * t[i]) % p;
                    bigger.push_back(w);
                }
            std::sort(bigger.begin(), bigger.end());
            bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
            span = std::move(bigger);
        }
        // pole-free tuples must form a subspace: the zero tuple plus the rest
        u64 span_size = 1;
        for (size_t i = 0; i < as_basis.size(); ++i) span_size *= p;
        if (span_size != pole_free_count + 1)
            throw error(errc::singular_model_point, "pole-free classes not a subspace");
    }

    // ---- constant coordinates ----
    std::vector<Poly> mus;
    for (size_t i : cst) mus.push_back(irreducibles_of_degree(F, u32(cov.comps[i].n)).front());

    // ---- evaluate coordinate equations in the residue field, compute L ----
    Place chart_place = P.is_infinity() ? Place::finite(pi_chart) : P;
    ResidueField R = residue_field(chart_place);
    auto eval_kP = [&](const RationalFunction& g) { return evaluate(g, chart_place, R); };

    u64 J = 1;
    auto lcm_factor_degrees = [&](const Poly& f) {
        for (auto& [h, m] : poly_factor(f).parts) {
            (void)m;
            J = std::lcm(J, u64(h.degree()));
        }
    };
    std::vector<Fe> gen_unit_val, as_val, mu_ignored;
    for (size_t j = 0; j < gens.size(); ++j) {
        Fe v = eval_kP(gen_unit[j]);
        gen_unit_val.push_back(v);
        std::vector<Fe> cs(gen_ord[j] + 1, Fe::zero(R.field));
        cs[gen_ord[j]] = Fe::one(R.field);
        cs[0] = -v;
        lcm_factor_degrees(Poly(R.field, cs));
    }
    for (size_t l = 0; l < as_basis.size(); ++l) {
        Fe v = eval_kP(as_reduced[l]);
        as_val.push_back(v);
        std::vector<Fe> cs(p + 1, Fe::zero(R.field));
        cs[p] = Fe::one(R.field);
        cs[1] = -Fe::one(R.field);
        cs[0] = -v;
        lcm_factor_degrees(Poly(R.field, cs));
    }
    for (auto& mu : mus) lcm_factor_degrees(R.constants.map_poly(mu));

    u32 kL = F->k * d * u32(J);
    if (kL > 32) throw error(errc::enumeration_too_large, "oracle splitting field too large");
    FieldPtr L = J == 1 ? R.field : make_field(p, kL);
    FieldMap up = embedding(R.field, L);
    FieldMap base_up = embedding(F, L);

    auto roots_in_L = [&](u32 deg, const Fe& rhs_const, bool artin) {
        // roots of T^deg = v (kummer/constant-free form) or T^p - T = v
        std::vector<Fe> cs(deg + 1, Fe::zero(L));
        cs[deg] = Fe::one(L);
        if (artin) cs[1] = -Fe::one(L);
        cs[0] = -rhs_const;
        auto roots = poly_roots(Poly(L, cs));
        if (roots.size() != deg)
            throw error(errc::singular_model_point, "coordinate equation does not split");
        return roots;
    };

    std::vector<std::vector<Fe>> coord_roots;
    for (size_t j = 0; j < gens.size(); ++j)
        coord_roots.push_back(roots_in_L(u32(gen_ord[j]), up(gen_unit_val[j]), false));
    for (size_t l = 0; l < as_basis.size(); ++l)
        coord_roots.push_back(roots_in_L(p, up(as_val[l]), true));
    for (auto& mu : mus) {
        auto roots = poly_roots(base_up.map_poly(mu));
        if (roots.size() != mu.coeffs().size() - 1)
            throw error(errc::singular_model_point, "constant coordinate does not split");
        coord_roots.push_back(roots);
    }

    // ---- build the fiber: cartesian product, filtered by tame relations ----
    std::vector<std::vector<Fe>> fiber{{}};
    for (auto& roots : coord_roots) {
        std::vector<std::vector<Fe>> next;
        if (fiber.size() * roots.size() > max_enum)
            throw error(errc::enumeration_too_large, "fiber too large");
        for (auto& pt : fiber)
            for (auto& r : roots) {
                auto q = pt;
                q.push_back(r);
                next.push_back(std::move(q));
            }
        fiber = std::move(next);
    }
    if (!relations.empty()) {
        std::vector<std::vector<Fe>> kept;
        for (auto& pt : fiber) {
            bool ok = true;
            for (auto& [lam, cunit] : relations) {
                Fe lhs = Fe::one(L);
                for (size_t j = 0; j < gens.size(); ++j) lhs = lhs * pt[j].pow(lam[j]);
                if (lhs != up(eval_kP(cunit))) { ok = false; break; }
            }
            if (ok) kept.push_back(pt);
        }
        fiber = std::move(kept);
    }
    // the fiber realizes the inertia-fixed subextension: #G / e points
    u64 expected_U = U.size();
    u64 expected = expected_U;
    for (size_t l = 0; l < as_basis.size(); ++l) expected *= p;
    for (auto& mu : mus) expected *= u64(mu.degree());
    if (fiber.size() != expected)
        throw error(errc::singular_model_point, "fiber has unexpected size");

    // ---- orbits of the arithmetic Frobenius ----
    auto frob = [&](const std::vector<Fe>& pt) {
        std::vector<Fe> out;
        out.reserve(pt.size());
        for (auto& a : pt) out.push_back(a.pow(qP));
        return out;
    };
    auto key = [&](const std::vector<Fe>& pt) {
        std::vector<u64> k;
        k.reserve(pt.size());
        for (auto& a : pt) k.push_back(a.encode());
        return k;
    };
    std::map<std::vector<u64>, size_t> index;
    for (size_t i = 0; i < fiber.size(); ++i) index[key(fiber[i])] = i;
    std::vector<bool> seen(fiber.size(), false);
    std::vector<std::vector<size_t>> orbits;
    for (size_t i = 0; i < fiber.size(); ++i) {
        if (seen[i]) continue;
        std::vector<size_t> orb;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            orb.push_back(j);
            auto it = index.find(key(frob(fiber[j])));
            if (it == index.end())
                throw error(errc::singular_model_point, "Frobenius leaves the fiber");
            j = it->second;
        }
        orbits.push_back(std::move(orb));
    }

    // ---- match group elements against the Frobenius action ----
    // multiplicative factor of g on the j-th tame coordinate
    auto tame_mult = [&](u64 g, size_t j) {
        auto a = cov.G.decode(g);
        auto e = Gk.decode(gens[j]);
        Fe z = Fe::one(F);
        for (size_t i = 0; i < kum.size(); ++i)
            z = z * root_of_unity(F, cov.comps[kum[i]].n).pow(u64(a[kum[i]]) * e[i]);
        return z;
    };
    auto as_offset = [&](u64 g, size_t l) {
        auto a = cov.G.decode(g);
        u64 s = 0;
        for (size_t i = 0; i < ass.size(); ++i) s += u64(a[ass[i]]) * as_basis[l][i];
        return u32(s % p);
    };

    OracleData out(P);
    for (u64 g = 0; g < cov.G.size(); ++g) {
        bool triv = true;
        for (size_t j = 0; j < gens.size() && triv; ++j)
            if (!tame_mult(g, j).is_one()) triv = false;
        for (size_t l = 0; l < as_basis.size() && triv; ++l)
            if (as_offset(g, l) != 0) triv = false;
        auto a = cov.G.decode(g);
        for (size_t l = 0; l < cst.size() && triv; ++l) {
            // Frobenius^{a} fixes the constant coordinate iff m | a
            if (a[cst[l]] % cov.comps[cst[l]].n != 0) triv = false;
        }
        if (triv) out.I.push_back(g);
    }

    for (auto& orb : orbits) {
        // canonical representative: minimal encoded point
        size_t rep = orb[0];
        for (size_t j : orb)
            if (key(fiber[j]) < key(fiber[rep])) rep = j;
        const auto& pt = fiber[rep];
        auto phipt = frob(pt);
        OrbitData od;
        od.orbit_size = orb.size();
        od.deg_Q = u64(d) * orb.size();
        od.point = key(pt);
        for (u64 g = 0; g < cov.G.size(); ++g) {
            bool match = true;
            size_t c = 0;
            for (size_t j = 0; j < gens.size() && match; ++j, ++c)
                if (base_up(tame_mult(g, j)) * pt[c] != phipt[c]) match = false;
            for (size_t l = 0; l < as_basis.size() && match; ++l, ++c)
                if (pt[c] + base_up(Fe::from_int(F, as_offset(g, l))) != phipt[c]) match = false;
            auto a = cov.G.decode(g);
            for (size_t l = 0; l < cst.size() && match; ++l, ++c) {
                u64 qc = 1;
                for (u32 i = 0; i < a[cst[l]]; ++i) qc *= F->q;
                if (pt[c].pow(qc) != phipt[c]) match = false;
            }
            if (match) od.coset.push_back(g);
        }
        out.places.push_back(std::move(od));
    }
    std::sort(out.places.begin(), out.places.end(),
              [](const OrbitData& a, const OrbitData& b) { return a.point < b.point; });

    // ---- aggregate and self-check ----
    out.num_places_above = out.places.size();
    out.f = out.places.front().orbit_size;
    out.deg_Q = out.places.front().deg_Q;
    out.e = out.I.size();
    for (auto& od : out.places) {
        if (od.orbit_size != out.f || od.coset != out.places.front().coset)
            throw error(errc::singular_model_point, "orbits disagree (abelian data not uniform)");
        if (od.coset.size() != out.e)
            throw error(errc::singular_model_point, "coset size mismatch");
    }
    std::vector<u64> dgens = out.I;
    dgens.push_back(out.places.front().coset.front());
    out.D = cov.G.closure(dgens);
    if (out.D.size() != out.e * out.f || out.num_places_above * out.D.size() != cov.G.size())
        throw error(errc::singular_model_point, "orbit-stabilizer mismatch");
    return out;
}

} // namespace ffc

#endif

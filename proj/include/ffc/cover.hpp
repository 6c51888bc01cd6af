#ifndef FFC_COVER_HPP
#define FFC_COVER_HPP

#include <map>
#include <numeric>

#include "ffc/abelian.hpp"
#include "ffc/place.hpp"

namespace ffc {

enum class CoverKind { kummer, artin_schreier, constant };

struct ComponentSpec {
    CoverKind kind;
    u64 n = 0;          // kummer exponent n, or constant degree m; p for AS
    RationalFunction f; // kummer / artin-schreier function

    static ComponentSpec kummer(u64 n, RationalFunction f) {
        return {CoverKind::kummer, n, std::move(f)};
    }
    static ComponentSpec artin_schreier(RationalFunction f) {
        return {CoverKind::artin_schreier, 0, std::move(f)};
    }
    static ComponentSpec constant(const FieldPtr& F, u64 m) {
        return {CoverKind::constant, m, RationalFunction::zero(F)};
    }
};

/// An explicit finite normal extension M/K of K = F_q(x) with abelian group
/// G = prod of cyclic components, one per cover component:
///   kummer(n, f):        y^n = f,     generator action y -> zeta_n y
///   artin_schreier(f):   y^p - y = f, generator action y -> y + 1
///   constant(m):         M = F_{q^m} K, generator = Frobenius restriction
/// Composites are handled uniformly as multi-component covers. Construction
/// validates geometric irreducibility (kummer), reduced form (artin-schreier,
/// reduction applied automatically) and joint linear disjointness, and
/// computes the exact constant field k' = F_{q^h}, the geometric subgroup
/// N = Aut(M/K k'), and the Frobenius coset Fbar N in G/N.
class Cover {
  public:
    FieldPtr F;                     // base field k = F_q
    std::vector<ComponentSpec> comps;
    AbelianGroup G;
    u64 h = 1;                      // [k':k]
    std::vector<u32> frob_index;    // G -> Z/h, gamma |-> power of Frobenius on k'
    std::vector<u64> N;             // kernel of frob_index (sorted set)
    std::vector<u64> FbarN;         // { gamma : frob_index == 1 mod h }

    u64 group_size() const { return G.size(); }
    bool geometric() const { return h == 1; }

    bool in_FbarN(u64 g) const { return set_contains(FbarN, g); }

    std::vector<size_t> kummer_components() const { return by_kind(CoverKind::kummer); }
    std::vector<size_t> as_components() const { return by_kind(CoverKind::artin_schreier); }
    std::vector<size_t> constant_components() const { return by_kind(CoverKind::constant); }

  private:
    std::vector<size_t> by_kind(CoverKind k) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < comps.size(); ++i)
            if (comps[i].kind == k) out.push_back(i);
        return out;
    }

    friend Cover make_cover(const FieldPtr&, std::vector<ComponentSpec>);
    Cover(FieldPtr F_, std::vector<ComponentSpec> cs, AbelianGroup G_)
        : F(std::move(F_)), comps(std::move(cs)), G(std::move(G_)) {}
};

namespace detail {

struct PolyBefore {
    bool operator()(const Poly& a, const Poly& b) const { return a.before(b); }
};

// Finite-support exponent vectors of the divisor of f (denominator monic, so
// the constant part is just the leading numerator coefficient).
inline std::map<Poly, long long, PolyBefore> divisor_exponents(const RationalFunction& f) {
    std::map<Poly, long long, PolyBefore> div;
    for (auto& [pi, m] : poly_factor(f.num()).parts) div[pi] += (long long)m;
    for (auto& [pi, m] : poly_factor(f.den()).parts) div[pi] -= (long long)m;
    return div;
}

inline u64 crt_pair(u64 r1, u64 m1, u64 r2, u64 m2) {
    // m1, m2 coprime; solve x = r1 (m1), x = r2 (m2)
    for (u64 x = r1; ; x += m1)
        if (x % m2 == r2) return x % (m1 * m2);
}

inline u64 dlog_in_cyclic(const Fe& value, const Fe& zeta, u64 order) {
    Fe pw = Fe::one(value.field());
    for (u64 j = 0; j < order; ++j) {
        if (pw == value) return j;
        pw = pw * zeta;
    }
    throw error(errc::internal, "value not in the expected cyclic group");
}

} // namespace detail

inline Cover make_cover(const FieldPtr& F, std::vector<ComponentSpec> specs) {
    if (specs.empty()) throw error(errc::bad_descriptor, "cover needs at least one component");
    const u64 q = F->q;
    const u32 p = F->p;

    // per-component validation
    for (auto& c : specs) {
        switch (c.kind) {
            case CoverKind::kummer: {
                if (c.n < 2) throw error(errc::bad_descriptor, "kummer exponent must be >= 2");
                if ((q - 1) % c.n != 0)
                    throw error(errc::wild_kummer,
                                "kummer exponent must divide q-1 (tame, with mu_n in k)");
                if (c.f.is_zero()) throw error(errc::zero_argument, "kummer function is zero");
                auto div = detail::divisor_exponents(c.f);
                Fe lead = c.f.num().leading();
                for (u64 e = 2; e <= c.n; ++e) {
                    if (c.n % e != 0 || !detail::is_prime_u64(e)) continue;
                    bool all_div = true;
                    for (auto& [pi, a] : div)
                        if (a % (long long)e != 0) { all_div = false; break; }
                    if (all_div && lead.pow((q - 1) / e).is_one())
                        throw error(errc::not_geometric, "kummer function is an e-th power, e=" +
                                                             std::to_string(e));
                }
                break;
            }
            case CoverKind::artin_schreier: {
                c.n = p;
                c.f = as_global_reduce(c.f);
                bool trivial = c.f.is_zero() ||
                               (c.f.is_constant() &&
                                local_as_class(c.f, Place::infinity(F)).trace == 0);
                if (trivial)
                    throw error(errc::not_reduced,
                                "artin-schreier function reduces to a trivial class");
                break;
            }
            case CoverKind::constant: {
                if (c.n < 2) throw error(errc::bad_descriptor, "constant degree must be >= 2");
                break;
            }
        }
    }

    std::vector<u32> orders;
    for (auto& c : specs) orders.push_back(u32(c.n));
    Cover cov(F, specs, AbelianGroup(orders));

    auto kum = cov.kummer_components();
    auto ass = cov.as_components();
    auto cst = cov.constant_components();

    // ---- kummer block: joint class group analysis in K^*/(K^*)^{n*} ----
    // V_const = tuples t with prod f_i^{t_i n*/n_i} constant modulo n*-th
    // powers; the map t -> class of that constant is injective iff the
    // components are jointly independent. V_const is cyclic and gives the
    // kummer block's constant subfield degree jK.
    u64 nstar = 1;
    for (size_t i : kum) nstar = std::lcm(nstar, specs[i].n);
    std::vector<std::map<Poly, long long, detail::PolyBefore>> divs;
    std::vector<Fe> leads;
    for (size_t i : kum) {
        divs.push_back(detail::divisor_exponents(specs[i].f));
        leads.push_back(specs[i].f.num().leading());
    }
    u64 tuples = 1;
    for (size_t i : kum) {
        tuples *= specs[i].n;
        if (tuples > 1000000) throw error(errc::enumeration_too_large, "kummer block too large");
    }
    std::set<Poly, detail::PolyBefore> support;
    for (auto& d : divs)
        for (auto& [pi, a] : d) support.insert(pi);

    u64 jK = 1;
    std::vector<u32> tstar;           // generator tuple of V_const
    Fe zeta0 = Fe::one(F);            // image of Frobenius on the kummer constants
    {
        std::vector<std::vector<u32>> vconst;
        std::vector<Fe> vconst_c;
        for (u64 code = 0; code < tuples; ++code) {
            u64 cc = code;
            std::vector<u32> t(kum.size());
            for (size_t i = 0; i < kum.size(); ++i) {
                t[i] = u32(cc % specs[kum[i]].n);
                cc /= specs[kum[i]].n;
            }
            bool constant_class = true;
            for (auto& pi : support) {
                long long s = 0;
                for (size_t i = 0; i < kum.size(); ++i) {
                    auto it = divs[i].find(pi);
                    long long a = it == divs[i].end() ? 0 : it->second;
                    s += (long long)t[i] * a * (long long)(nstar / specs[kum[i]].n);
                }
                if (s % (long long)nstar != 0) { constant_class = false; break; }
            }
            if (!constant_class) continue;
            Fe ct = Fe::one(F);
            for (size_t i = 0; i < kum.size(); ++i)
                ct = ct * leads[i].pow(u64(t[i]) * (nstar / specs[kum[i]].n));
            bool nonzero_tuple = code != 0;
            if (nonzero_tuple && ct.pow((q - 1) / nstar).is_one()) {
                if (kum.size() == 1)
                    throw error(errc::internal, "single kummer cover with degree collapse");
                throw error(errc::not_disjoint, "kummer components are multiplicatively dependent");
            }
            vconst.push_back(t);
            vconst_c.push_back(ct);
        }
        jK = vconst.size();
        // pick the first tuple whose constant class has full order jK
        for (size_t i = 0; i < vconst.size(); ++i) {
            u64 ord = 1;
            while (!vconst_c[i].pow(ord * ((q - 1) / nstar)).is_one()) ++ord;
            if (ord == jK) {
                tstar = vconst[i];
                zeta0 = vconst_c[i].pow((q - 1) / nstar);
                break;
            }
        }
        if (jK > 1 && tstar.empty())
            throw error(errc::internal, "kummer constant group not cyclic");
    }

    // ---- artin-schreier block: joint class analysis in K/wp(K) ----
    u64 jAS = 1;
    std::vector<u32> sstar;
    u32 trstar = 0;
    if (!ass.empty()) {
        u64 as_tuples = 1;
        for (size_t i = 0; i < ass.size(); ++i) {
            as_tuples *= p;
            if (as_tuples > 1000000)
                throw error(errc::enumeration_too_large, "artin-schreier block too large");
        }
        for (u64 code = 1; code < as_tuples; ++code) {
            u64 cc = code;
            std::vector<u32> t(ass.size());
            for (size_t i = 0; i < ass.size(); ++i) {
                t[i] = u32(cc % p);
                cc /= p;
            }
            RationalFunction g = RationalFunction::zero(F);
            for (size_t i = 0; i < ass.size(); ++i) {
                RationalFunction term = specs[ass[i]].f;
                for (u32 rep = 1; rep < t[i]; ++rep) term = term + specs[ass[i]].f;
                if (t[i]) g = g + term;
            }
            RationalFunction r = as_global_reduce(g);
            if (r.is_zero())
                throw error(errc::not_disjoint, "artin-schreier components are dependent");
            if (r.is_constant()) {
                u32 tr = local_as_class(r, Place::infinity(F)).trace;
                if (tr == 0)
                    throw error(errc::not_disjoint, "artin-schreier components are dependent");
                if (jAS == 1) {
                    jAS = p;
                    sstar = t;
                    trstar = tr;
                }
            }
        }
    }

    // ---- constant block and cross-block coprimality ----
    u64 mstar = 1;
    for (size_t i : cst) {
        if (std::gcd(mstar, specs[i].n) != 1)
            throw error(errc::not_disjoint, "constant components share a subfield");
        mstar *= specs[i].n;
    }
    if (std::gcd(jK, mstar) != 1)
        throw error(errc::not_disjoint, "kummer constant subfield meets a constant component");
    if (std::gcd(jAS, mstar) != 1)
        throw error(errc::not_disjoint, "artin-schreier constant subfield meets a constant component");

    cov.h = jK * jAS * mstar;

    // ---- Frobenius index map G -> Z/h ----
    std::vector<Fe> zetas;
    for (size_t i : kum) zetas.push_back(root_of_unity(F, specs[i].n));
    u32 trstar_inv = 0;
    if (jAS == p) {
        for (u32 v = 1; v < p; ++v)
            if (v * trstar % p == 1) trstar_inv = v;
    }
    cov.frob_index.assign(cov.G.size(), 0);
    for (u64 g = 0; g < cov.G.size(); ++g) {
        auto e = cov.G.decode(g);
        u64 idx = 0, mod = 1;
        if (jK > 1) {
            Fe zval = Fe::one(F);
            for (size_t i = 0; i < kum.size(); ++i)
                zval = zval * zetas[i].pow(u64(e[kum[i]]) * tstar[i]);
            idx = detail::dlog_in_cyclic(zval, zeta0, jK);
            mod = jK;
        }
        if (jAS == p) {
            u64 s = 0;
            for (size_t i = 0; i < ass.size(); ++i) s += u64(e[ass[i]]) * sstar[i];
            u64 r = s % p * trstar_inv % p;
            idx = detail::crt_pair(idx, mod, r, p);
            mod *= p;
        }
        for (size_t i : cst) {
            idx = detail::crt_pair(idx, mod, e[i] % specs[i].n, specs[i].n);
            mod *= specs[i].n;
        }
        cov.frob_index[g] = u32(idx);
    }

    for (u64 g = 0; g < cov.G.size(); ++g) {
        if (cov.frob_index[g] == 0) cov.N.push_back(g);
        if (cov.frob_index[g] == 1 % cov.h) cov.FbarN.push_back(g);
    }
    if (cov.N.size() * cov.h != cov.G.size())
        throw error(errc::internal, "constant-field index map is not balanced");
    if (cov.FbarN.size() != cov.N.size())
        throw error(errc::internal, "Frobenius coset has wrong size");

    return cov;
}

// ---------------------------------------------------------------------------
// Genus g_{k'}(M), computed over the exact constant field.
// ---------------------------------------------------------------------------

namespace detail {

// Ramified places of a kummer component: v_P(f) not divisible by n.
inline std::vector<std::pair<Place, long long>> kummer_ramification(const ComponentSpec& c) {
    std::vector<std::pair<Place, long long>> out;
    for (auto& [pi, a] : divisor_exponents(c.f)) {
        if (a % (long long)c.n != 0) out.emplace_back(Place::finite(pi), a);
    }
    const FieldPtr& F = c.f.field();
    long long vinf = (long long)c.f.den().degree() - c.f.num().degree();
    if (vinf % (long long)c.n != 0) out.emplace_back(Place::infinity(F), vinf);
    return out;
}

inline u64 kummer_constant_degree(const ComponentSpec& c) {
    // h of the single kummer cover: the order of V_const, equal to
    // gcd(n, all divisor exponents) once validity holds.
    u64 d = c.n;
    for (auto& [pi, a] : divisor_exponents(c.f))
        d = std::gcd(d, u64(a < 0 ? -a : a));
    return d;
}

} // namespace detail

/// Genus over the exact constant field. Supported: a single non-constant
/// component plus any constant components (constant field extensions do not
/// change the genus over a perfect field); purely constant covers have genus
/// zero. Tame kummer covers use Riemann-Hurwitz over the algebraic closure,
/// where a place of degree d contributes d points with unchanged ramification
/// index; artin-schreier covers use the wild conductor (p-1)(|v_P(f)|+1) at
/// each pole of the reduced function.
inline u64 genus(const Cover& cov) {
    std::vector<size_t> noncst;
    for (size_t i = 0; i < cov.comps.size(); ++i)
        if (cov.comps[i].kind != CoverKind::constant) noncst.push_back(i);
    if (noncst.empty()) return 0;
    if (noncst.size() > 1)
        throw error(errc::unsupported_genus, "genus needs a single non-constant component");
    const ComponentSpec& c = cov.comps[noncst[0]];
    if (c.kind == CoverKind::kummer) {
        u64 n = c.n;
        u64 hc = detail::kummer_constant_degree(c);
        long long Nc = (long long)(n / hc); // geometric degree
        long long two_g_minus_2 = -2 * Nc;
        for (auto& [P, v] : detail::kummer_ramification(c)) {
            u64 e = n / std::gcd(n, u64(v < 0 ? -v : v));
            two_g_minus_2 += (long long)P.degree() * (Nc / (long long)e) * ((long long)e - 1);
        }
        if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
            throw error(errc::internal, "kummer genus formula inconsistency");
        return u64((two_g_minus_2 + 2) / 2);
    }
    // artin-schreier
    if (c.f.is_constant()) return 0;
    u32 p = cov.F->p;
    long long two_g_minus_2 = -2 * (long long)p;
    for (auto& [pi, a] : detail::divisor_exponents(c.f))
        if (a < 0) two_g_minus_2 += (long long)(p - 1) * (-a + 1) * pi.degree();
    long long vinf = (long long)c.f.den().degree() - c.f.num().degree();
    if (vinf < 0) two_g_minus_2 += (long long)(p - 1) * (-vinf + 1);
    if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
        throw error(errc::internal, "artin-schreier genus formula inconsistency");
    return u64((two_g_minus_2 + 2) / 2);
}

} // namespace ffc

#endif

#ifndef FFC_PLACE_HPP
#define FFC_PLACE_HPP

#include <optional>

#include "ffc/ratfunc.hpp"
#include "ffc/tower.hpp"

namespace ffc {

/// A place of K = F_q(x): a monic irreducible polynomial, or the place at
/// infinity (degree 1).
class Place {
  public:
    static Place infinity(const FieldPtr& F) {
        Place P;
        P.F_ = F;
        P.infinite_ = true;
        return P;
    }
    static Place finite(const Poly& pi) {
        if (!pi.is_monic() || !poly_irreducible(pi))
            throw error(errc::bad_descriptor, "place polynomial must be monic irreducible");
        Place P;
        P.F_ = pi.field();
        P.infinite_ = false;
        P.pi_ = pi;
        return P;
    }

    const FieldPtr& base_field() const { return F_; }
    bool is_infinity() const { return infinite_; }
    const Poly& pi() const {
        if (infinite_) throw error(errc::internal, "infinite place has no polynomial");
        return pi_;
    }
    u32 degree() const { return infinite_ ? 1 : u32(pi_.degree()); }
    /// Residue field cardinality q^{deg P}.
    u64 residue_cardinality() const {
        u64 r = 1;
        for (u32 i = 0; i < degree(); ++i) r *= F_->q;
        return r;
    }

    bool operator==(const Place& o) const {
        return infinite_ == o.infinite_ && (infinite_ || pi_ == o.pi_);
    }
    bool operator!=(const Place& o) const { return !(*this == o); }

    /// Canonical order: by degree; within a degree, finite places in
    /// polynomial order, then infinity.
    bool before(const Place& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        if (infinite_ != o.infinite_) return !infinite_;
        if (infinite_) return false;
        return pi_.before(o.pi_);
    }

    std::string str() const { return infinite_ ? "inf" : pi_.str(); }

  private:
    Place() = default;
    FieldPtr F_;
    bool infinite_ = false;
    Poly pi_;
};

inline u32 multiplicity_of(const Poly& f, const Poly& pi) {
    u32 m = 0;
    Poly g = f;
    for (;;) {
        auto [q, r] = g.divmod(pi);
        if (!r.is_zero()) return m;
        ++m;
        g = q;
    }
}

/// v_P(g); std::nullopt encodes v_P(0) = +infinity.
inline std::optional<long long> valuation(const RationalFunction& g, const Place& P) {
    if (g.is_zero()) return std::nullopt;
    if (P.is_infinity()) return (long long)g.den().degree() - g.num().degree();
    return (long long)multiplicity_of(g.num(), P.pi()) - multiplicity_of(g.den(), P.pi());
}

inline long long valuation_nonzero(const RationalFunction& g, const Place& P) {
    auto v = valuation(g, P);
    if (!v) throw error(errc::zero_argument, "valuation of the zero function");
    return *v;
}

// ---------------------------------------------------------------------------
// Residue arithmetic in F_q[x]/(pi). Local computations (unit parts, power
// characters, Artin-Schreier traces) run in this quotient-ring presentation;
// the abstract residue field F_{q^d} below is built only where the public
// evaluate() interface needs an actual field element.
// ---------------------------------------------------------------------------

inline Poly invmod(const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = a % m, s0 = Poly::zero(m.field()), s1 = Poly::one(m.field());
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw error(errc::division_by_zero, "element not invertible mod pi");
    return s0 * r0.leading().inverse() % m;
}

/// View of a place as a finite place of a chart: for finite P this is
/// (pi, g); for infinity it is (s, g(1/s)). All local machinery is written
/// against this view, so infinity needs no special cases downstream.
struct LocalView {
    Poly pi;            // monic irreducible in the chart variable
    RationalFunction g; // the function transported to the chart

    long long val() const {
        auto v = valuation(g, Place::finite(pi));
        if (!v) throw error(errc::zero_argument, "valuation of zero");
        return *v;
    }
};

inline LocalView local_view(const RationalFunction& g, const Place& P) {
    if (P.is_infinity()) return {Poly::x(g.field()), g.infinity_chart()};
    return {P.pi(), g};
}

/// Residue of the unit part g * pi^{-v_P(g)} in F_q[x]/(pi), for nonzero g.
/// The canonical uniformizers are pi itself and s = 1/x at infinity; with
/// these fixed, every derived quantity is reproducible.
inline Poly unit_part_residue(const LocalView& lv) {
    if (lv.g.is_zero()) throw error(errc::zero_argument, "unit part of zero");
    Poly num = lv.g.num(), den = lv.g.den();
    u32 a = multiplicity_of(num, lv.pi), b = multiplicity_of(den, lv.pi);
    for (u32 i = 0; i < a; ++i) num = num / lv.pi;
    for (u32 i = 0; i < b; ++i) den = den / lv.pi;
    return num * invmod(den, lv.pi) % lv.pi;
}

/// Residue of g itself (requires v_P(g) >= 0), in F_q[x]/(pi).
inline Poly residue_mod_pi(const LocalView& lv) {
    if (lv.g.is_zero()) return Poly::zero(lv.g.field());
    if (lv.val() < 0) throw error(errc::pole_at_place, "pole at place");
    return lv.g.num() % lv.pi * invmod(lv.g.den(), lv.pi) % lv.pi;
}

/// Trace from F_q[x]/(pi) = F_{q^d} down to F_p, as an integer in [0, p).
inline u32 trace_to_prime_mod_pi(const Poly& c, const Poly& pi) {
    const FieldPtr& F = pi.field();
    u32 kd = F->k * u32(pi.degree());
    Poly s = c % pi, t = s;
    for (u32 i = 1; i < kd; ++i) {
        t = poly_powmod(t, F->p, pi);
        s = (s + t) % pi;
    }
    if (s.degree() > 0) throw error(errc::internal, "trace not constant");
    if (s.is_zero()) return 0;
    Fe v = s.coeff(0);
    if (v.rep().size() > 1) throw error(errc::internal, "trace not in prime field");
    return v.rep().empty() ? 0 : v.rep()[0];
}

// ---------------------------------------------------------------------------
// Abstract residue fields (public evaluate() surface).
// ---------------------------------------------------------------------------

/// The residue field of P realized as the canonical F_{p^{k deg P}}, together
/// with the embedding of the constants and the chosen root of pi (the image
/// of x). Root choice: minimal canonical encoding.
struct ResidueField {
    FieldPtr field;
    FieldMap constants; // F_q -> k_P
    Fe x0;              // image of x (unused for the infinite place)
};

inline ResidueField residue_field(const Place& P) {
    const FieldPtr& F = P.base_field();
    if (P.is_infinity()) return {F, FieldMap{F, F, F->k >= 2 ? Fe::gen_t(F) : Fe::zero(F)}, Fe::zero(F)};
    u32 d = P.degree();
    FieldPtr kP = F->k * d == 1 ? F : make_field(F->p, F->k * d);
    FieldMap emb = F->k * d == 1 ? FieldMap{F, F, Fe::zero(F)} : embedding(F, kP);
    auto roots = poly_roots(emb.map_poly(P.pi()));
    if (roots.empty()) throw error(errc::internal, "pi has no root in residue field");
    return {kP, emb, roots.front()};
}

/// Image of g in the residue field k_P; requires v_P(g) >= 0.
inline Fe evaluate(const RationalFunction& g, const Place& P, const ResidueField& R) {
    auto v = valuation(g, P);
    if (v && *v < 0) throw error(errc::pole_at_place, "pole at place");
    if (g.is_zero()) return Fe::zero(R.field);
    if (P.is_infinity()) {
        if (*v > 0) return Fe::zero(R.field);
        return g.leading_ratio();
    }
    if (*v > 0) return Fe::zero(R.field);
    Fe n = R.constants.map_poly(g.num())(R.x0);
    Fe d = R.constants.map_poly(g.den())(R.x0);
    return n / d;
}

inline Fe evaluate(const RationalFunction& g, const Place& P) {
    return evaluate(g, P, residue_field(P));
}

/// All places of degree <= d: finite places in canonical order plus infinity,
/// ordered canonically. The degree-1 block always has q + 1 entries.
inline std::vector<Place> places_up_to_degree(const FieldPtr& F, u32 d, u64 max_enum = 10000000) {
    std::vector<Place> out;
    for (u32 e = 1; e <= d; ++e)
        for (auto& pi : irreducibles_of_degree(F, e, max_enum)) out.push_back(Place::finite(pi));
    out.push_back(Place::infinity(F));
    std::sort(out.begin(), out.end(), [](const Place& a, const Place& b) { return a.before(b); });
    return out;
}

inline std::vector<Place> rational_places(const FieldPtr& F) {
    return places_up_to_degree(F, 1);
}

// ---------------------------------------------------------------------------
// Local Artin-Schreier reduction.
// ---------------------------------------------------------------------------

/// Local class of g in K_P / wp(K_P), where wp(w) = w^p - w: either the class
/// is ramified (a pole of order prime to p survives), or it is pole-free and
/// characterized by the trace of its constant term. The reduction
/// g -> g - wp(w) picks w = B * pi^{-j/p} with B a polynomial representative
/// of the p-th root of the leading residue, which strictly decreases the pole
/// order; termination is guaranteed.
struct LocalClassAS {
    bool pole_free;
    u32 trace; // Tr_{k_P/F_p} of the constant term, in [0, p); valid if pole_free
    RationalFunction reduced_chart; // the reduced function, in chart coordinates
};

inline LocalClassAS local_as_class(const RationalFunction& g0, const Place& P) {
    LocalView lv = local_view(g0, P);
    const FieldPtr& F = g0.field();
    u32 p = F->p;
    u32 kd = F->k * u32(lv.pi.degree());
    RationalFunction g = lv.g;
    for (;;) {
        if (g.is_zero()) return {true, 0, g};
        long long v = valuation_nonzero(g, Place::finite(lv.pi));
        if (v >= 0) {
            Poly c = residue_mod_pi({lv.pi, g});
            return {true, trace_to_prime_mod_pi(c, lv.pi), g};
        }
        if ((-v) % p != 0) return {false, 0, g};
        // kill the leading term: subtract wp(B * pi^{-j/p})
        u64 j = u64(-v);
        Poly lead = unit_part_residue({lv.pi, g});
        // p-th root of the residue: raise to q_P / p = p^{kd-1}
        u128 e = 1;
        for (u32 i = 0; i + 1 < kd; ++i) e *= p;
        Poly B = poly_powmod(lead, e, lv.pi);
        Poly piPow = Poly::one(F);
        for (u64 i = 0; i < j / p; ++i) piPow = piPow * lv.pi;
        RationalFunction w(B, piPow);
        g = g - artin_schreier_op(w);
    }
}

/// Global Artin-Schreier reduction: returns g - wp(w) with every pole order
/// either nonexistent or prime to p. Only the class of g modulo wp(K) is
/// preserved, which is all the cover construction needs.
inline RationalFunction as_global_reduce(RationalFunction g) {
    const FieldPtr& F = g.field();
    u32 p = F->p;
    for (bool changed = true; changed;) {
        changed = false;
        if (g.is_zero()) break;
        // finite poles
        for (auto& [pi, mult] : poly_factor(g.den()).parts) {
            (void)mult;
            long long v = valuation_nonzero(g, Place::finite(pi));
            while (v < 0 && (-v) % p == 0) {
                u64 j = u64(-v);
                Poly lead = unit_part_residue({pi, g});
                u128 e = 1;
                for (u32 i = 0; i + 1 < F->k * u32(pi.degree()); ++i) e *= p;
                Poly B = poly_powmod(lead, e, pi);
                Poly piPow = Poly::one(F);
                for (u64 i = 0; i < j / p; ++i) piPow = piPow * pi;
                g = g - artin_schreier_op(RationalFunction(B, piPow));
                changed = true;
                if (g.is_zero()) break;
                v = valuation_nonzero(g, Place::finite(pi));
            }
            if (g.is_zero()) break;
        }
        if (g.is_zero()) break;
        // infinity: v = deg den - deg num
        long long v = (long long)g.den().degree() - g.num().degree();
        while (v < 0 && (-v) % p == 0) {
            u64 j = u64(-v);
            LocalView lv = local_view(g, Place::infinity(F));
            Poly lead = unit_part_residue(lv);
            u128 e = 1;
            for (u32 i = 0; i + 1 < F->k; ++i) e *= p;
            Poly B = poly_powmod(lead, e, lv.pi); // constant
            Fe b = B.is_zero() ? Fe::zero(F) : B.coeff(0);
            // w = b * x^{j/p}
            std::vector<Fe> xc(j / p + 1, Fe::zero(F));
            xc[j / p] = b;
            g = g - artin_schreier_op(RationalFunction(Poly(F, xc)));
            changed = true;
            if (g.is_zero()) break;
            v = (long long)g.den().degree() - g.num().degree();
        }
    }
    return g;
}

} // namespace ffc

#endif

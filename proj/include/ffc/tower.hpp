#ifndef FFC_TOWER_HPP
#define FFC_TOWER_HPP

#include "ffc/poly.hpp"

namespace ffc {

/// Field embedding F_{p^a} -> F_{p^b} for a | b, realized by sending the
/// tower generator t of the subfield to a root of the subfield's modulus in
/// the big field. The root is unique up to Frobenius; we always pick the one
/// with minimal canonical encoding, which makes runs reproducible.
struct FieldMap {
    FieldPtr from, to;
    Fe t_image; // image of t; unused when from is a prime field

    Fe operator()(const Fe& a) const {
        if (!a.field()->same_as(*from)) throw error(errc::field_mismatch, "wrong source field");
        Fe r = Fe::zero(to);
        Fe pw = Fe::one(to);
        for (size_t i = 0; i < a.rep().size(); ++i) {
            r = r + pw * Fe::from_int(to, a.rep()[i]);
            pw = pw * t_image;
        }
        return r;
    }

    Poly map_poly(const Poly& f) const {
        std::vector<Fe> cs;
        cs.reserve(f.coeffs().size());
        for (auto& c : f.coeffs()) cs.push_back((*this)(c));
        return Poly(to, std::move(cs));
    }
};

inline FieldMap embedding(const FieldPtr& from, const FieldPtr& to) {
    if (from->p != to->p) throw error(errc::field_mismatch, "different characteristics");
    if (to->k % from->k != 0) throw error(errc::field_mismatch, "no embedding: degree does not divide");
    if (from->k == 1) return {from, to, Fe::zero(to)};
    if (from->same_as(*to)) return {from, to, Fe::gen_t(to)}; // identity
    std::vector<long long> mod_ints(from->modulus.begin(), from->modulus.end());
    Poly m = Poly::from_ints(to, mod_ints);
    auto roots = poly_roots(m);
    if (roots.empty()) throw error(errc::internal, "modulus has no root in target field");
    return {from, to, roots.front()};
}

} // namespace ffc

#endif

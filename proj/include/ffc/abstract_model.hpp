#ifndef FFC_ABSTRACT_MODEL_HPP
#define FFC_ABSTRACT_MODEL_HPP

#include <random>

#include "ffc/group.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// Abstract combinatorial model of a normal extension with one chosen place Q:
/// subgroups I inside D inside G with D/I cyclic generated by the image of
/// the designated Frobenius coset gamma0 I, a base degree deg_k(Q|_K), plus
/// the constant-field data (N, Fbar). The full orbit {gQ} is derived from Q
/// through (gQ, M/K) = g (Q, M/K) g^{-1}, which makes equivariance true by
/// construction; validate() re-verifies it together with the size identities.
struct AbstractModel {
    Group G;
    std::vector<u32> N;     // normal, G/N cyclic
    u32 fbar;               // representative of the generator coset Fbar N
    std::vector<u32> D, I;  // subgroups for the chosen place Q
    u32 gamma0;             // representative: (Q, M/K) = gamma0 I
    u32 degP = 1;           // deg_k(Q|_K)

    std::vector<u32> frob_coset() const { return G.coset(gamma0, I); }
    u64 deg_Q() const { return u64(degP) * (D.size() / I.size()); }

    void validate() const {
        if (gamma0 >= G.size() || fbar >= G.size())
            throw error(errc::element_not_in_group, "bad element index");
        if (!G.is_subgroup(D) || !G.is_subgroup(I) || !G.is_subgroup(N))
            throw error(errc::bad_descriptor, "D, I, N must be subgroups");
        for (u32 x : I)
            if (!G.contains_subset(D, x))
                throw error(errc::bad_descriptor, "I must sit inside D");
        if (!G.is_normal_in(I, D)) throw error(errc::bad_descriptor, "I not normal in D");
        if (!G.is_normal_in(N, all_of(G))) throw error(errc::bad_descriptor, "N not normal in G");
        if (!G.contains_subset(D, gamma0))
            throw error(errc::bad_descriptor, "Frobenius representative outside D");
        // D/I cyclic generated by gamma0 I
        if (u64(G.coset_order(gamma0, I)) * I.size() != D.size())
            throw error(errc::bad_descriptor, "D/I not generated by the Frobenius coset");
        // G/N cyclic generated by fbar N; I inside N; gamma0 in Fbar N when P rational
        if (u64(G.coset_order(fbar, N)) * N.size() != G.size())
            throw error(errc::bad_descriptor, "G/N not generated by Fbar");
        for (u32 x : I)
            if (!G.contains_subset(N, x))
                throw error(errc::bad_descriptor, "inertia acts on constants");
        if (degP == 1 && !G.contains_subset(G.coset(fbar, N), gamma0))
            throw error(errc::bad_descriptor, "Frobenius coset not inside Fbar N");
        // equivariance well-definedness: gQ = g'Q implies equal conjugated cosets
        auto base = frob_coset();
        for (u32 g = 0; g < G.size(); ++g)
            for (u32 dd : D) {
                u32 g2 = G.mul(g, dd);
                if (G.conj_set(g, base) != G.conj_set(g2, base))
                    throw error(errc::bad_descriptor, "coset conjugation not well-defined");
            }
        // orbit-stabilizer
        if (orbit_reps().size() * D.size() != G.size())
            throw error(errc::bad_descriptor, "orbit size mismatch");
    }

    /// One representative g per place gQ in the orbit (distinct cosets gD).
    std::vector<u32> orbit_reps() const {
        std::vector<u32> reps;
        std::set<std::vector<u32>> seen;
        for (u32 g = 0; g < G.size(); ++g)
            if (seen.insert(G.coset(g, D)).second) reps.push_back(g);
        return reps;
    }

  private:
    static std::vector<u32> all_of(const Group& G) {
        std::vector<u32> v(G.size());
        std::iota(v.begin(), v.end(), 0);
        return v;
    }
};

/// The measure (P,M)(gamma) of an abstract place: with Gamma the conjugacy
/// class of gamma, #((Q,M/K) meets Gamma) / (#Gamma * #(Q,M/K)). Conjugation
/// invariance and independence of the representative Q are properties, tested
/// as such.
inline Rational measure(const AbstractModel& m, u32 gamma) {
    if (gamma >= m.G.size()) throw error(errc::element_not_in_group, "gamma outside G");
    auto cls = m.G.conjugacy_class(gamma);
    auto coset = m.frob_coset();
    u64 hits = 0;
    for (u32 c : cls)
        if (m.G.contains_subset(coset, c)) ++hits;
    return Rational((std::int64_t)hits, (std::int64_t)(cls.size() * coset.size()));
}

/// Fiber count of psi: places gQ in the orbit with gamma in (gQ, M/K),
/// computed both by direct enumeration and by the closed formula
/// #G * #((Q,M/K) meets Gamma) / (#Gamma * #D); the two must agree.
inline u64 psi_fiber_count(const AbstractModel& m, u32 gamma) {
    if (gamma >= m.G.size()) throw error(errc::element_not_in_group, "gamma outside G");
    if (m.degP != 1) throw error(errc::bad_descriptor, "psi counts need a rational base place");
    auto base = m.frob_coset();
    u64 direct = 0;
    for (u32 g : m.orbit_reps())
        if (m.G.contains_subset(m.G.conj_set(g, base), gamma)) ++direct;
    auto cls = m.G.conjugacy_class(gamma);
    u64 hits = 0;
    for (u32 c : cls)
        if (m.G.contains_subset(base, c)) ++hits;
    u64 num = u64(m.G.size()) * hits;
    u64 den = cls.size() * m.D.size();
    if (num % den != 0)
        throw error(errc::formula_mismatch, "fiber formula not integral");
    if (num / den != direct)
        throw error(errc::formula_mismatch, "formula disagrees with enumeration");
    return direct;
}

/// Seeded random model: sample a decomposition group D, a normal I in D with
/// cyclic quotient, a generating Frobenius coset, then constant-field data
/// (N, Fbar) consistent with the place. All invariants hold by construction
/// and are re-verified.
inline AbstractModel random_abstract_model(const Group& G, u64 seed) {
    std::mt19937_64 rng(seed ^ 0x5bf03635u);
    std::uniform_int_distribution<u32> pick(0, G.size() - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<u32> D = G.closure({pick(rng), pick(rng)});
        // sample I normal in D with cyclic quotient generated by some coset
        std::vector<u32> I;
        u32 gamma0 = G.identity();
        bool found = false;
        for (int tries = 0; tries < 50 && !found; ++tries) {
            std::vector<u32> gens;
            u32 ngens = pick(rng) % 3;
            for (u32 i = 0; i < ngens; ++i) gens.push_back(D[pick(rng) % D.size()]);
            std::vector<u32> cand = G.closure(gens);
            bool inside = true;
            for (u32 x : cand)
                if (!G.contains_subset(D, x)) inside = false;
            if (!inside || !G.is_normal_in(cand, D)) continue;
            // need a coset generating D/cand
            std::vector<u32> gens_of_quot;
            for (u32 d : D)
                if (u64(G.coset_order(d, cand)) * cand.size() == D.size()) gens_of_quot.push_back(d);
            if (gens_of_quot.empty()) continue;
            I = cand;
            gamma0 = gens_of_quot[pick(rng) % gens_of_quot.size()];
            found = true;
        }
        if (!found) { // D/D is trivially cyclic
            I = D;
            gamma0 = D[pick(rng) % D.size()];
        }
        // constant-field data: N contains the commutators and I, quotient
        // cyclic and generated by gamma0 N
        AbstractModel m{G, {}, 0, D, I, gamma0, 1};
        std::vector<u32> base = G.commutators();
        base.insert(base.end(), I.begin(), I.end());
        std::vector<u32> N;
        bool okN = false;
        for (int tries = 0; tries < 20 && !okN; ++tries) {
            std::vector<u32> gens = base;
            u32 extra = pick(rng) % 3;
            for (u32 i = 0; i < extra; ++i) gens.push_back(pick(rng));
            std::vector<u32> cand = G.normal_closure(gens);
            if (u64(G.coset_order(gamma0, cand)) * cand.size() != G.size()) continue;
            if (!G.contains_subset(G.coset(gamma0, cand), gamma0)) continue;
            N = cand;
            okN = true;
        }
        if (!okN) {
            // N = G always works: trivial quotient, Fbar = identity coset
            N.resize(G.size());
            std::iota(N.begin(), N.end(), 0);
        }
        m.N = N;
        m.fbar = gamma0;
        if (u64(G.coset_order(m.fbar, m.N)) * m.N.size() != G.size()) continue;
        m.validate();
        return m;
    }
    throw error(errc::internal, "could not sample a model");
}

} // namespace ffc

#endif

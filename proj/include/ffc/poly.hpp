#ifndef FFC_POLY_HPP
#define FFC_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ffc/field.hpp"

namespace ffc {

/// Univariate polynomial over a finite field. Coefficients are little-endian
/// with no trailing zeros; the zero polynomial has an empty coefficient list.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr F) : F_(std::move(F)) {}
    Poly(FieldPtr F, std::vector<Fe> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

    static Poly zero(const FieldPtr& F) { return Poly(F); }
    static Poly one(const FieldPtr& F) { return Poly(F, {Fe::one(F)}); }
    static Poly x(const FieldPtr& F) { return Poly(F, {Fe::zero(F), Fe::one(F)}); }
    static Poly constant(const Fe& a) { return Poly(a.field(), {a}); }
    /// Builds sum c_i x^i from integer coefficients (reduced mod p).
    static Poly from_ints(const FieldPtr& F, const std::vector<long long>& cs) {
        std::vector<Fe> v;
        v.reserve(cs.size());
        for (auto n : cs) v.push_back(Fe::from_int(F, n));
        return Poly(F, std::move(v));
    }

    const FieldPtr& field() const { return F_; }
    const std::vector<Fe>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return int(c_.size()) - 1; }
    const Fe& leading() const {
        if (is_zero()) throw error(errc::zero_polynomial, "leading coefficient of zero");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back().is_one(); }
    Fe coeff(size_t i) const { return i < c_.size() ? c_[i] : Fe::zero(F_); }

    Poly operator+(const Poly& o) const {
        std::vector<Fe> r(std::max(c_.size(), o.c_.size()), Fe::zero(F_));
        for (size_t i = 0; i < r.size(); ++i) {
            Fe a = i < c_.size() ? c_[i] : Fe::zero(F_);
            Fe b = i < o.c_.size() ? o.c_[i] : Fe::zero(F_);
            r[i] = a + b;
        }
        return Poly(F_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Fe> r(std::max(c_.size(), o.c_.size()), Fe::zero(F_));
        for (size_t i = 0; i < r.size(); ++i) {
            Fe a = i < c_.size() ? c_[i] : Fe::zero(F_);
            Fe b = i < o.c_.size() ? o.c_[i] : Fe::zero(F_);
            r[i] = a - b;
        }
        return Poly(F_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(F_);
        std::vector<Fe> r(c_.size() + o.c_.size() - 1, Fe::zero(F_));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(F_, std::move(r));
    }
    Poly operator*(const Fe& s) const {
        std::vector<Fe> r = c_;
        for (auto& a : r) a = a * s;
        return Poly(F_, std::move(r));
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
        Poly q(F_), r = *this;
        if (r.degree() < d.degree()) return {q, r};
        q.c_.assign(r.degree() - d.degree() + 1, Fe::zero(F_));
        Fe lcinv = d.leading().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Fe coef = r.leading() * lcinv;
            size_t shift = r.degree() - d.degree();
            q.c_[shift] = coef;
            for (size_t i = 0; i < d.c_.size(); ++i)
                r.c_[shift + i] = r.c_[shift + i] - coef * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    Fe operator()(const Fe& a) const {
        Fe r = Fe::zero(a.field());
        for (size_t i = c_.size(); i-- > 0;) r = r * a + lift(c_[i], a.field());
        return r;
    }

    Poly derivative() const {
        if (c_.size() < 2) return zero(F_);
        std::vector<Fe> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) {
            Fe m = Fe::from_int(F_, (long long)i);
            r.push_back(c_[i] * m);
        }
        return Poly(F_, std::move(r));
    }

    /// Reversal x^deg * f(1/x); used for the place at infinity.
    Poly reversed() const {
        std::vector<Fe> r(c_.rbegin(), c_.rend());
        return Poly(F_, std::move(r));
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Canonical order: by degree, then lexicographically in the encoded
    /// coefficients from the constant term up. Used everywhere determinism
    /// matters (place ordering, minimal-root choices).
    bool before(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = c_.size(); i-- > 0;) {
            u64 a = c_[i].encode(), b = o.c_[i].encode();
            if (a != b) return a < b;
        }
        return false;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += "+";
            std::string cs = c_[i].str();
            bool unit = c_[i].is_one();
            if (i == 0) s += cs;
            else {
                if (!unit) s += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    static Fe lift(const Fe& c, const FieldPtr& target) {
        if (c.field()->same_as(*target)) return c;
        throw error(errc::field_mismatch, "evaluation field differs from coefficient field");
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr F_;
    std::vector<Fe> c_;
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

inline Poly poly_powmod(Poly base, u128 e, const Poly& m) {
    Poly r = Poly::one(base.field());
    base = base % m;
    while (e) {
        if (e & 1) r = r * base % m;
        e >>= 1;
        if (e) base = base * base % m;
    }
    return r;
}

/// Substitutes one polynomial into another: f(g).
inline Poly poly_compose(const Poly& f, const Poly& g) {
    Poly r = Poly::zero(f.field());
    for (size_t i = f.coeffs().size(); i-- > 0;)
        r = r * g + Poly::constant(f.coeffs()[i]);
    return r;
}

namespace detail {

// f = g(x^p) -> g, using coefficient p-th roots (a -> a^{p^{k-1}}).
inline Poly pth_root_decimate(const Poly& f) {
    const FieldPtr& F = f.field();
    u32 p = F->p;
    std::vector<Fe> g;
    for (size_t i = 0; i < f.coeffs().size(); i += p) {
        Fe c = f.coeffs()[i];
        Fe root = c;
        for (u32 j = 0; j + 1 < F->k; ++j) root = root.frobenius();
        g.push_back(root);
    }
    return Poly(F, std::move(g));
}

} // namespace detail

/// Squarefree decomposition of a monic polynomial: list of (g_i, multiplicity)
/// with distinct squarefree g_i and f = prod g_i^{m_i}.
inline std::vector<std::pair<Poly, u64>> squarefree_decomposition(const Poly& f0) {
    Poly f = f0.monic();
    std::vector<std::pair<Poly, u64>> out;
    Poly d = f.derivative();
    if (d.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(detail::pth_root_decimate(f)))
            out.emplace_back(g, m * f.field()->p);
        return out;
    }
    Poly c = poly_gcd(f, d);
    Poly w = f / c;
    u64 i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        c = c / y;
        w = y;
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [g, m] : squarefree_decomposition(detail::pth_root_decimate(c)))
            out.emplace_back(g, m * f.field()->p);
    return out;
}

/// Distinct-degree decomposition of a monic squarefree polynomial:
/// pairs (product of irreducible factors of degree d, d).
inline std::vector<std::pair<Poly, u64>> distinct_degree_decomposition(const Poly& f0) {
    Poly f = f0.monic();
    const FieldPtr& F = f.field();
    std::vector<std::pair<Poly, u64>> out;
    Poly h = Poly::x(F), x = Poly::x(F);
    for (u64 d = 1; 2 * d <= u64(f.degree()); ++d) {
        h = poly_powmod(h, F->q, f);
        Poly g = poly_gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, u64(f.degree()));
    return out;
}

namespace detail {

// Cantor-Zassenhaus equal-degree splitting; f squarefree, all factors of
// degree d. Seeded rng keeps factorizations reproducible.
inline void equal_degree_split(std::vector<Poly>& out, const Poly& f, u64 d,
                               std::mt19937_64& rng) {
    if (u64(f.degree()) == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& F = f.field();
    std::uniform_int_distribution<u64> pick(0, F->q - 1);
    for (;;) {
        std::vector<Fe> rc;
        for (int i = 0; i < f.degree(); ++i) rc.push_back(decode_element(F, pick(rng)));
        Poly r(F, std::move(rc));
        if (r.is_zero()) continue;
        Poly g;
        if (F->p == 2) {
            // trace map over F_{2^k}: sum r^{2^i} for i < k*d
            Poly t = r % f, acc = t;
            u64 steps = u64(F->k) * d;
            for (u64 i = 1; i < steps; ++i) {
                t = t * t % f;
                acc = (acc + t) % f;
            }
            g = poly_gcd(acc, f);
        } else {
            u128 e = 1;
            for (u64 i = 0; i < d; ++i) e *= F->q;
            g = poly_gcd(poly_powmod(r, (e - 1) / 2, f) - Poly::one(F), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(out, g, d, rng);
            equal_degree_split(out, f / g, d, rng);
            return;
        }
    }
}

} // namespace detail

struct Factorization {
    Fe lead;                                 // leading coefficient
    std::vector<std::pair<Poly, u64>> parts; // monic irreducible, multiplicity
};

/// Full factorization over F_q: squarefree split, then distinct-degree, then
/// randomized (seeded) equal-degree splitting. The re-expanded product equals
/// the input exactly.
inline Factorization poly_factor(const Poly& f, u64 seed = 0) {
    if (f.is_zero()) throw error(errc::zero_polynomial, "factoring the zero polynomial");
    Factorization out{f.leading(), {}};
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed ^ 0xa076bcf3u ^ (u64(f.degree()) << 32) ^ f.field()->q);
    for (auto& [g, mult] : squarefree_decomposition(f.monic())) {
        for (auto& [h, d] : distinct_degree_decomposition(g)) {
            std::vector<Poly> irr;
            detail::equal_degree_split(irr, h, d, rng);
            for (auto& w : irr) out.parts.emplace_back(w, mult);
        }
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& a, const auto& b) { return a.first.before(b.first); });
    return out;
}

inline bool poly_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    Poly m = f.monic();
    if (poly_gcd(m, m.derivative()).degree() > 0) return false;
    auto dd = distinct_degree_decomposition(m);
    return dd.size() == 1 && dd[0].second == u64(m.degree());
}

/// Roots of f in its coefficient field (each listed once), canonically sorted.
inline std::vector<Fe> poly_roots(const Poly& f, u64 seed = 0) {
    std::vector<Fe> roots;
    if (f.is_zero()) throw error(errc::zero_polynomial, "roots of zero polynomial");
    // restrict to the part splitting over F_q: gcd(f, x^q - x)
    const FieldPtr& F = f.field();
    Poly m = f.monic();
    Poly xq = poly_powmod(Poly::x(F), F->q, m);
    Poly g = poly_gcd(xq - Poly::x(F), m);
    if (g.degree() <= 0) return roots;
    for (auto& [h, mult] : poly_factor(g, seed).parts) {
        (void)mult;
        if (h.degree() == 1) roots.push_back(-h.coeff(0));
    }
    std::sort(roots.begin(), roots.end(),
              [](const Fe& a, const Fe& b) { return a.encode() < b.encode(); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// All monic irreducible polynomials of exact degree d, canonically ordered.
/// Enumeration is capped: q^d must stay within max_enum.
inline std::vector<Poly> irreducibles_of_degree(const FieldPtr& F, u32 d, u64 max_enum = 10000000) {
    if (d == 0) throw error(errc::bad_descriptor, "degree must be positive");
    u128 total = 1;
    for (u32 i = 0; i < d; ++i) {
        total *= F->q;
        if (total > max_enum)
            throw error(errc::enumeration_too_large, "q^d exceeds enumeration limit");
    }
    std::vector<Poly> out;
    for (u64 code = 0; code < u64(total); ++code) {
        u64 c = code;
        std::vector<Fe> cs(d + 1, Fe::zero(F));
        cs[d] = Fe::one(F);
        for (u32 i = 0; i < d; ++i) {
            cs[i] = decode_element(F, c % F->q);
            c /= F->q;
        }
        Poly f(F, std::move(cs));
        if (poly_irreducible(f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.before(b); });
    return out;
}

inline long long moebius(u64 n) {
    long long mu = 1;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    if (n > 1) mu = -mu;
    return mu;
}

/// Number of monic irreducibles of degree d over F_q: (1/d) sum_{e|d} mu(e) q^{d/e}.
inline u64 count_irreducibles(u64 q, u32 d) {
    __int128 s = 0;
    for (u32 e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        __int128 t = 1;
        for (u32 i = 0; i < d / e; ++i) t *= q;
        s += moebius(e) * t;
    }
    return u64(s / d);
}

/// Random monic irreducible of degree d over F, found by seeded search.
inline Poly random_irreducible(const FieldPtr& F, u32 d, u64 seed = 0) {
    std::mt19937_64 rng(seed ^ (u64(d) * 0x9e3779b97f4a7c15ULL) ^ F->q);
    std::uniform_int_distribution<u64> pick(0, F->q - 1);
    for (int tries = 0; tries < 1000000; ++tries) {
        std::vector<Fe> cs(d + 1, Fe::zero(F));
        cs[d] = Fe::one(F);
        for (u32 i = 0; i < d; ++i) cs[i] = decode_element(F, pick(rng));
        Poly f(F, std::move(cs));
        if (poly_irreducible(f)) return f;
    }
    throw error(errc::internal, "random irreducible search failed");
}

} // namespace ffc

#endif

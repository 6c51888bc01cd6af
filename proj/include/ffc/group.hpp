#ifndef FFC_GROUP_HPP
#define FFC_GROUP_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/field.hpp"

namespace ffc {

/// Finite group given by its multiplication table. Arbitrary (in particular
/// non-abelian) groups are supported; elements are indices into the table.
class Group {
  public:
    Group(std::string name, std::vector<std::vector<u32>> table)
        : name_(std::move(name)), mul_(std::move(table)) {
        const u32 n = u32(mul_.size());
        for (auto& row : mul_)
            if (row.size() != n) throw error(errc::bad_descriptor, "ragged multiplication table");
        id_ = n;
        for (u32 e = 0; e < n; ++e) {
            bool ok = true;
            for (u32 x = 0; x < n; ++x)
                if (mul_[e][x] != x || mul_[x][e] != x) { ok = false; break; }
            if (ok) { id_ = e; break; }
        }
        if (id_ == n) throw error(errc::bad_descriptor, "no identity element");
        inv_.assign(n, n);
        for (u32 a = 0; a < n; ++a) {
            for (u32 b = 0; b < n; ++b)
                if (mul_[a][b] == id_ && mul_[b][a] == id_) { inv_[a] = b; break; }
            if (inv_[a] == n) throw error(errc::bad_descriptor, "element without inverse");
        }
        // associativity spot-check is implicit in the constructions below;
        // external tables get the full check
    }

    const std::string& name() const { return name_; }
    u32 size() const { return u32(mul_.size()); }
    u32 identity() const { return id_; }
    u32 mul(u32 a, u32 b) const { return mul_[a][b]; }
    u32 inv(u32 a) const { return inv_[a]; }
    u32 conj(u32 g, u32 a) const { return mul_[mul_[g][a]][inv_[g]]; } // g a g^-1
    const std::vector<std::vector<u32>>& table() const { return mul_; }

    u32 order_of(u32 a) const {
        u32 x = a, o = 1;
        while (x != id_) {
            x = mul_[x][a];
            ++o;
        }
        return o;
    }

    bool is_abelian() const {
        for (u32 a = 0; a < size(); ++a)
            for (u32 b = a + 1; b < size(); ++b)
                if (mul_[a][b] != mul_[b][a]) return false;
        return true;
    }

    void check_associative() const {
        for (u32 a = 0; a < size(); ++a)
            for (u32 b = 0; b < size(); ++b)
                for (u32 c = 0; c < size(); ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw error(errc::bad_descriptor, "table is not associative");
    }

    std::vector<u32> conjugacy_class(u32 a) const {
        std::set<u32> cls;
        for (u32 g = 0; g < size(); ++g) cls.insert(conj(g, a));
        return {cls.begin(), cls.end()};
    }

    std::vector<u32> closure(const std::vector<u32>& gens) const {
        std::set<u32> seen{id_};
        std::vector<u32> frontier{id_};
        while (!frontier.empty()) {
            std::vector<u32> next;
            for (u32 a : frontier)
                for (u32 g : gens) {
                    u32 b = mul_[a][g];
                    if (seen.insert(b).second) next.push_back(b);
                }
            frontier = std::move(next);
        }
        return {seen.begin(), seen.end()};
    }

    /// Smallest normal subgroup containing the given elements.
    std::vector<u32> normal_closure(const std::vector<u32>& gens) const {
        std::vector<u32> all;
        for (u32 s : gens)
            for (u32 g = 0; g < size(); ++g) all.push_back(conj(g, s));
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return closure(all);
    }

    std::vector<u32> commutators() const {
        std::set<u32> out;
        for (u32 a = 0; a < size(); ++a)
            for (u32 b = 0; b < size(); ++b)
                out.insert(mul_[mul_[a][b]][inv_[mul_[b][a]]]);
        return {out.begin(), out.end()};
    }

    bool contains_subset(const std::vector<u32>& H, u32 x) const {
        return std::binary_search(H.begin(), H.end(), x);
    }

    bool is_subgroup(const std::vector<u32>& H) const {
        if (!contains_subset(H, id_)) return false;
        for (u32 a : H)
            for (u32 b : H)
                if (!contains_subset(H, mul_[a][b])) return false;
        return true;
    }

    /// Is H normal inside D? (H and D sorted element sets, H subset of D.)
    bool is_normal_in(const std::vector<u32>& H, const std::vector<u32>& D) const {
        for (u32 d : D)
            for (u32 h : H)
                if (!contains_subset(H, conj(d, h))) return false;
        return true;
    }

    /// Left coset x H as a sorted set.
    std::vector<u32> coset(u32 x, const std::vector<u32>& H) const {
        std::vector<u32> out;
        out.reserve(H.size());
        for (u32 h : H) out.push_back(mul_[x][h]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<u32> conj_set(u32 g, const std::vector<u32>& S) const {
        std::vector<u32> out;
        out.reserve(S.size());
        for (u32 s : S) out.push_back(conj(g, s));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Order of the coset x H inside the quotient D/H (H normal in D).
    u32 coset_order(u32 x, const std::vector<u32>& H) const {
        u32 o = 1;
        u32 y = x;
        while (!contains_subset(H, y)) {
            y = mul_[y][x];
            ++o;
        }
        return o;
    }

  private:
    std::string name_;
    std::vector<std::vector<u32>> mul_;
    u32 id_;
    std::vector<u32> inv_;
};

namespace detail {

inline Group from_permutations(const std::string& name,
                               const std::vector<std::vector<u32>>& gens) {
    // BFS closure of the generated permutation group; composition (fg)(x) = f(g(x))
    size_t n = gens.at(0).size();
    std::vector<u32> idp(n);
    std::iota(idp.begin(), idp.end(), 0);
    std::vector<std::vector<u32>> elems{idp};
    std::set<std::vector<u32>> seen{idp};
    for (size_t i = 0; i < elems.size(); ++i)
        for (auto& g : gens) {
            std::vector<u32> h(n);
            for (size_t x = 0; x < n; ++x) h[x] = elems[i][g[x]];
            if (seen.insert(h).second) elems.push_back(h);
        }
    std::sort(elems.begin(), elems.end());
    std::vector<std::vector<u32>> table(elems.size(), std::vector<u32>(elems.size()));
    auto index_of = [&](const std::vector<u32>& e) {
        return u32(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
    };
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) {
            std::vector<u32> c(n);
            for (size_t x = 0; x < n; ++x) c[x] = elems[a][elems[b][x]];
            table[a][b] = index_of(c);
        }
    return Group(name, std::move(table));
}

} // namespace detail

inline Group cyclic_group(u32 n) {
    std::vector<std::vector<u32>> t(n, std::vector<u32>(n));
    for (u32 a = 0; a < n; ++a)
        for (u32 b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return Group("Z" + std::to_string(n), std::move(t));
}

inline Group direct_product(const Group& A, const Group& B) {
    u32 n = A.size() * B.size();
    std::vector<std::vector<u32>> t(n, std::vector<u32>(n));
    for (u32 a = 0; a < n; ++a)
        for (u32 b = 0; b < n; ++b) {
            u32 a1 = a % A.size(), a2 = a / A.size();
            u32 b1 = b % A.size(), b2 = b / A.size();
            t[a][b] = A.mul(a1, b1) + B.mul(a2, b2) * A.size();
        }
    return Group(A.name() + "x" + B.name(), std::move(t));
}

inline Group symmetric_group(u32 n, const std::string& name) {
    std::vector<std::vector<u32>> gens;
    std::vector<u32> cycle(n), swap01(n);
    for (u32 i = 0; i < n; ++i) cycle[i] = (i + 1) % n, swap01[i] = i;
    std::swap(swap01[0], swap01[1]);
    gens.push_back(cycle);
    gens.push_back(swap01);
    return detail::from_permutations(name, gens);
}

inline Group alternating_group4() {
    // generated by (012) and (01)(23)
    return detail::from_permutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

inline Group dihedral_group4() {
    // symmetries of the square: rotation (0123) and a reflection
    return detail::from_permutations("D4", {{1, 2, 3, 0}, {3, 2, 1, 0}});
}

inline Group quaternion_group() {
    // elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign)
    auto enc = [](u32 axis, bool neg) { return axis * 2 + (neg ? 1 : 0); };
    std::vector<std::vector<u32>> t(8, std::vector<u32>(8));
    // axis multiplication: 0=1, 1=i, 2=j, 3=k; returns (axis, extra sign)
    auto axmul = [](u32 a, u32 b) -> std::pair<u32, bool> {
        if (a == 0) return {b, false};
        if (b == 0) return {a, false};
        if (a == b) return {0, true}; // i^2 = j^2 = k^2 = -1
        // i j = k, j k = i, k i = j; reversed order flips the sign
        static const u32 third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        bool neg = (a == 2 && b == 1) || (a == 3 && b == 2) || (a == 1 && b == 3);
        return {third[a][b], neg};
    };
    for (u32 a = 0; a < 8; ++a)
        for (u32 b = 0; b < 8; ++b) {
            auto [ax, neg] = axmul(a / 2, b / 2);
            bool sign = (a % 2) ^ (b % 2) ^ neg;
            t[a][b] = enc(ax, sign);
        }
    Group G("Q8", std::move(t));
    G.check_associative();
    return G;
}

/// The built-in group library for the abstract layer.
inline Group group_by_name(const std::string& name) {
    std::string n = name;
    n.erase(std::remove(n.begin(), n.end(), '/'), n.end());
    if (n == "Z2xZ2" || n == "V4") return direct_product(cyclic_group(2), cyclic_group(2));
    if (n == "S3") return symmetric_group(3, "S3");
    if (n == "S4") return symmetric_group(4, "S4");
    if (n == "A4") return alternating_group4();
    if (n == "D4") return dihedral_group4();
    if (n == "Q8") return quaternion_group();
    if (n.size() > 1 && n[0] == 'Z') {
        u32 m = 0;
        for (size_t i = 1; i < n.size(); ++i) {
            if (!isdigit(n[i])) throw error(errc::bad_descriptor, "unknown group " + name);
            m = m * 10 + (n[i] - '0');
        }
        if (m == 0 || m > 512) throw error(errc::bad_descriptor, "bad cyclic order");
        return cyclic_group(m);
    }
    throw error(errc::bad_descriptor, "unknown group " + name);
}

} // namespace ffc

#endif

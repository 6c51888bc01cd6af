#ifndef FFC_ABELIAN_HPP
#define FFC_ABELIAN_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/field.hpp"

namespace ffc {

/// Finite abelian group presented as a direct product of cyclic components.
/// Elements are mixed-radix indices of their exponent vectors; subgroups and
/// cosets are explicit sorted index sets, so intersection and membership
/// tests are literal set operations.
class AbelianGroup {
  public:
    explicit AbelianGroup(std::vector<u32> orders) : orders_(std::move(orders)) {
        size_ = 1;
        for (u32 o : orders_) {
            if (o == 0) throw error(errc::bad_descriptor, "zero component order");
            size_ *= o;
            if (size_ > 1000000) throw error(errc::enumeration_too_large, "group too large");
        }
    }

    u64 size() const { return size_; }
    u32 rank() const { return u32(orders_.size()); }
    const std::vector<u32>& orders() const { return orders_; }

    std::vector<u32> decode(u64 idx) const {
        std::vector<u32> e(orders_.size());
        for (size_t i = 0; i < orders_.size(); ++i) {
            e[i] = u32(idx % orders_[i]);
            idx /= orders_[i];
        }
        return e;
    }
    u64 encode(const std::vector<u32>& e) const {
        if (e.size() != orders_.size()) throw error(errc::element_not_in_group, "bad exponent vector");
        u64 idx = 0;
        for (size_t i = orders_.size(); i-- > 0;) idx = idx * orders_[i] + e[i] % orders_[i];
        return idx;
    }

    u64 add(u64 a, u64 b) const {
        auto x = decode(a), y = decode(b);
        for (size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % orders_[i];
        return encode(x);
    }
    u64 neg(u64 a) const {
        auto x = decode(a);
        for (size_t i = 0; i < x.size(); ++i) x[i] = (orders_[i] - x[i]) % orders_[i];
        return encode(x);
    }
    u64 order_of(u64 a) const {
        auto x = decode(a);
        u64 o = 1;
        for (size_t i = 0; i < x.size(); ++i)
            o = std::lcm(o, u64(orders_[i]) / std::gcd(u64(orders_[i]), u64(x[i])));
        return o;
    }

    /// Subgroup generated by the given elements, as a sorted index set.
    std::vector<u64> closure(const std::vector<u64>& gens) const {
        std::set<u64> seen{0};
        std::vector<u64> frontier{0};
        while (!frontier.empty()) {
            std::vector<u64> next;
            for (u64 a : frontier)
                for (u64 g : gens) {
                    u64 b = add(a, g);
                    if (seen.insert(b).second) next.push_back(b);
                }
            frontier = std::move(next);
        }
        return {seen.begin(), seen.end()};
    }

    std::vector<u64> coset(u64 a, const std::vector<u64>& H) const {
        std::vector<u64> out;
        out.reserve(H.size());
        for (u64 h : H) out.push_back(add(a, h));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<u64> all_elements() const {
        std::vector<u64> out(size_);
        for (u64 i = 0; i < size_; ++i) out[i] = i;
        return out;
    }

  private:
    std::vector<u32> orders_;
    u64 size_;
};

inline bool set_contains(const std::vector<u64>& sorted_set, u64 x) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

inline std::vector<u64> set_intersect(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace ffc

#endif

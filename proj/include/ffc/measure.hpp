#ifndef FFC_MEASURE_HPP
#define FFC_MEASURE_HPP

#include "ffc/rational.hpp"
#include "ffc/splitting.hpp"

namespace ffc {

/// The probability measure (P,M)(gamma) attached to the place of a cover:
/// #((Q,M/K) meets Gamma) / (#Gamma * #(Q,M/K)). Covers have abelian G, so
/// Gamma = {gamma} and the value is [gamma in coset] / e. Exact rational.
inline Rational measure(const Cover& cov, const FrobeniusData& fd, u64 gamma) {
    if (gamma >= cov.group_size()) throw error(errc::element_not_in_group, "gamma outside G");
    bool hit = set_contains(fd.coset, gamma);
    return Rational(hit ? 1 : 0, (std::int64_t)fd.coset.size());
}

} // namespace ffc

#endif

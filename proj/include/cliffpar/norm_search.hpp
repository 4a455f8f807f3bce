#ifndef CLIFFPAR_NORM_SEARCH_HPP
#define CLIFFPAR_NORM_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cliffpar/errors.hpp"
#include "cliffpar/f2ratfun.hpp"

namespace cliffpar {

/// Polynomials p1..p4 with N(p1/p2 + (p3/p4) i) = b, where K = F(i), i^2+i+1 = 0.
struct NormWitness {
    F2Poly p1, p2, p3, p4;
};

struct NormSearchStats {
    std::uint64_t buckets = 0;
    std::uint64_t buckets_pruned = 0;
    std::uint64_t tuples_checked = 0;
};

/// Left side of (p1 p4)^2 + p1 p2 p3 p4 + (p2 p3)^2 + b (p2 p4)^2.
inline F2Poly norm_condition(const F2Poly& b, const F2Poly& p1, const F2Poly& p2, const F2Poly& p3, const F2Poly& p4) {
    const F2Poly a = p1 * p4;
    const F2Poly c = p2 * p3;
    return a.square() + a * c + c.square() + b * (p2 * p4).square();
}

namespace detail {

inline bool even_even(const Monomial& m) { return m.t % 2 == 0 && m.u % 2 == 0; }

inline Monomial add(const Monomial& a, const Monomial& b) { return {a.t + b.t, a.u + b.u}; }

/// True when every tuple with these t-leading pairs (nullopt = zero
/// polynomial) provably leaves a nonzero left side.
///
/// If b has no monomial with both exponents even, neither has b C^2. The
/// lex-largest monomial among the leads of the three square-type summands is
/// even-even; if it is hit an odd number of times it survives, and nothing in
/// b C^2 can cancel it.
inline bool bucket_is_infeasible(bool b_has_even_even, bool b_is_zero, const std::optional<Monomial>& l1,
                                 const Monomial& l2, const std::optional<Monomial>& l3, const Monomial& l4) {
    if (b_has_even_even) return false;
    std::vector<Monomial> leads;
    if (l1) leads.push_back(add(add(*l1, l4), add(*l1, l4)));
    if (l1 && l3) leads.push_back(add(add(*l1, l2), add(*l3, l4)));
    if (l3) leads.push_back(add(add(l2, *l3), add(l2, *l3)));
    if (leads.empty()) return !b_is_zero;
    Monomial top = leads[0];
    for (const auto& m : leads)
        if (top < m) top = m;
    int hits = 0;
    for (const auto& m : leads) hits += (m == top) ? 1 : 0;
    return hits % 2 == 1 && even_even(top);
}

}  // namespace detail

/// Bounded search for b in N(K) over all 4-tuples of polynomials of total
/// degree <= degree_bound with p2, p4 != 0.
///
/// Tuples are grouped by the t-leading pairs of p1..p4; whole groups are
/// discarded by the leading-monomial parity argument, the rest are enumerated.
inline std::optional<NormWitness> is_norm_of_K_bounded(const F2RatFun& b, int degree_bound,
                                                      NormSearchStats* stats = nullptr) {
    if (!b.is_polynomial())
        throw Error(ErrorKind::UnsupportedTarget, "norm search takes a polynomial b; got " + b.to_string());
    const F2Poly& bp = b.num();
    bool b_even = false;
    for (const auto& m : bp.monomials()) b_even = b_even || detail::even_even(m);

    const auto mons = monomials_up_to(degree_bound);
    std::map<Monomial, std::vector<F2Poly>> buckets;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mons.size()); ++mask) {
        std::vector<Monomial> ms;
        for (std::size_t n = 0; n < mons.size(); ++n)
            if ((mask >> n) & 1U) ms.push_back(mons[n]);
        F2Poly p = F2Poly::from_monomials(std::move(ms));
        buckets[p.lex_leading()].push_back(std::move(p));
    }
    std::vector<std::optional<Monomial>> maybe_zero{std::nullopt};
    for (const auto& [lead, polys] : buckets) maybe_zero.emplace_back(lead);
    const std::vector<F2Poly> zero_only{F2Poly{}};
    auto members = [&](const std::optional<Monomial>& l) -> const std::vector<F2Poly>& {
        return l ? buckets.at(*l) : zero_only;
    };

    NormSearchStats local;
    std::optional<NormWitness> found;
    for (const auto& l1 : maybe_zero)
        for (const auto& [l2, b2] : buckets)
            for (const auto& l3 : maybe_zero)
                for (const auto& [l4, b4] : buckets) {
                    ++local.buckets;
                    if (detail::bucket_is_infeasible(b_even, bp.is_zero(), l1, l2, l3, l4)) {
                        ++local.buckets_pruned;
                        continue;
                    }
                    if (found) continue;
                    for (const auto& p1 : members(l1))
                        for (const auto& p2 : b2)
                            for (const auto& p3 : members(l3))
                                for (const auto& p4 : b4) {
                                    if (found) break;
                                    ++local.tuples_checked;
                                    if (norm_condition(bp, p1, p2, p3, p4).is_zero()) found = NormWitness{p1, p2, p3, p4};
                                }
                }
    if (stats) *stats = local;
    return found;
}

}  // namespace cliffpar

#endif

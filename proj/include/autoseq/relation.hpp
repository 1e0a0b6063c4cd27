#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "f2series.hpp"
#include "ratseries.hpp"

namespace autoseq {

/// One summand of a series identity: mult(X) * S(X^stride).
/// Over F2 the multiplier is an exponent list; powers S^(2^k) are passed as
/// stride 2^k, which is the same series coefficientwise.
struct F2RelTerm {
    const F2Series* series;
    std::size_t stride;
    std::vector<std::size_t> mult;  // polynomial, as exponents
};

struct RatRelTerm {
    const RatSeries* series;
    std::size_t stride;
    RatPoly mult;
};

namespace detail {

inline F2Series relation_sum(std::span<const F2RelTerm> terms, std::size_t bound) {
    for (const auto& t : terms)
        if (t.series->trunc() * t.stride < bound)
            throw std::invalid_argument("check_relation: bound exceeds available truncation");
    F2Series acc(bound);
    for (const auto& t : terms)
        acc = series_add(acc, mul_monomials(substitute(*t.series, t.stride, bound), t.mult));
    return acc;
}

inline RatSeries relation_sum(std::span<const RatRelTerm> terms, std::size_t bound) {
    for (const auto& t : terms)
        if (t.series->trunc() * t.stride < bound)
            throw std::invalid_argument("check_relation: bound exceeds available truncation");
    RatSeries acc(bound);
    for (const auto& t : terms)
        acc = series_add(acc, mul_poly(substitute(*t.series, t.stride, bound), t.mult));
    return acc;
}

}  // namespace detail

/// True iff the sum of the terms vanishes modulo X^bound.
inline bool check_relation(std::span<const F2RelTerm> terms, std::size_t bound) {
    return detail::relation_sum(terms, bound).is_zero();
}

inline bool check_relation(std::span<const RatRelTerm> terms, std::size_t bound) {
    return detail::relation_sum(terms, bound).is_zero();
}

/// First index < bound where the sum of the terms is nonzero, or -1.
inline long long first_violation(std::span<const F2RelTerm> terms, std::size_t bound) {
    const std::size_t v = detail::relation_sum(terms, bound).valuation();
    return v == bound ? -1 : static_cast<long long>(v);
}

inline long long first_violation(std::span<const RatRelTerm> terms, std::size_t bound) {
    RatSeries acc = detail::relation_sum(terms, bound);
    for (std::size_t i = 0; i < bound; ++i)
        if (acc.coeff(i) != 0) return static_cast<long long>(i);
    return -1;
}

}  // namespace autoseq

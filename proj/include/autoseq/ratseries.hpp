#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace autoseq {

/// Exact polynomial over Q, sparse list of (exponent, coefficient).
struct RatPoly {
    std::vector<std::pair<std::size_t, mpq_class>> terms;

    RatPoly() = default;
    RatPoly(std::initializer_list<std::pair<std::size_t, long>> t) {
        for (auto& [e, c] : t) terms.emplace_back(e, mpq_class(c));
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (auto& [e, c] : terms)
            if (c != 0) d = std::max(d, e);
        return d;
    }

    mpq_class coeff(std::size_t e) const {
        mpq_class s = 0;
        for (auto& [te, tc] : terms)
            if (te == e) s += tc;
        return s;
    }
};

/// Truncated power series over Q with exact coefficients (GMP rationals,
/// always in lowest terms). Same truncation discipline as F2Series: results
/// carry trunc = min of the inputs, never silently zero-extended.
class RatSeries {
public:
    RatSeries() = default;
    explicit RatSeries(std::size_t trunc) : c_(trunc) {}

    static RatSeries zero(std::size_t trunc) { return RatSeries(trunc); }

    static RatSeries one(std::size_t trunc) {
        RatSeries s(trunc);
        if (trunc > 0) s.c_[0] = 1;
        return s;
    }

    static RatSeries x(std::size_t trunc) {
        RatSeries s(trunc);
        if (trunc > 1) s.c_[1] = 1;
        return s;
    }

    static RatSeries from_ints(std::span<const std::int64_t> v) {
        RatSeries s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s.c_[i] = mpq_class(static_cast<long>(v[i]));
        return s;
    }

    static RatSeries from_bits(std::span<const std::uint8_t> v) {
        RatSeries s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s.c_[i] = int(v[i]);
        return s;
    }

    std::size_t trunc() const { return c_.size(); }

    const mpq_class& coeff(std::size_t i) const {
        if (i >= c_.size()) throw std::out_of_range("RatSeries::coeff: index beyond truncation");
        return c_[i];
    }

    void set(std::size_t i, mpq_class v) {
        if (i >= c_.size()) throw std::out_of_range("RatSeries::set: index beyond truncation");
        c_[i] = std::move(v);
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
    }

    friend bool operator==(const RatSeries& a, const RatSeries& b) {
        return a.c_ == b.c_;
    }

    friend RatSeries truncated(const RatSeries& a, std::size_t n) {
        n = std::min(n, a.c_.size());
        RatSeries r(n);
        std::copy_n(a.c_.begin(), n, r.c_.begin());
        return r;
    }

    friend RatSeries series_add(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend RatSeries series_sub(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        RatSeries r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend RatSeries substitute(const RatSeries& a, std::size_t stride, std::size_t cap) {
        if (stride == 0) throw std::invalid_argument("substitute: stride must be positive");
        const std::size_t avail =
            (a.c_.size() > cap / stride) ? cap : a.c_.size() * stride;
        RatSeries r(std::min(cap, avail));
        for (std::size_t i = 0; i < a.c_.size() && i * stride < r.c_.size(); ++i)
            r.c_[i * stride] = a.c_[i];
        return r;
    }

    friend RatSeries mul_poly(const RatSeries& a, const RatPoly& p) {
        RatSeries r(a.c_.size());
        for (auto& [e, c] : p.terms) {
            if (c == 0) continue;
            for (std::size_t i = 0; i + e < r.c_.size(); ++i)
                r.c_[i + e] += c * a.c_[i];
        }
        return r;
    }

    friend RatSeries series_compose(const RatSeries& outer, const RatSeries& inner) {
        const std::size_t n = std::min(outer.c_.size(), inner.c_.size());
        if (n > 0 && inner.c_[0] != 0)
            throw std::invalid_argument("series_compose: inner constant term must be zero");
        RatSeries r(n);
        for (std::size_t i = n; i-- > 0;) {
            r = series_mul(r, truncated(inner, n));
            if (outer.c_[i] != 0) r.c_[0] += outer.c_[i];
        }
        return r;
    }

    /// Compositional inverse, one coefficient at a time. Needs u(0) = 0 and
    /// u'(0) invertible. Meant for small truncations.
    friend RatSeries reversion_incremental(const RatSeries& u) {
        const std::size_t n = u.c_.size();
        if (n < 2) throw std::invalid_argument("reversion: need the series at least mod X^2");
        if (u.c_[0] != 0) throw std::invalid_argument("reversion: constant term must be zero");
        if (u.c_[1] == 0) throw std::invalid_argument("reversion: linear coefficient must be invertible");
        RatSeries v(n);
        v.c_[1] = 1 / u.c_[1];
        for (std::size_t m = 2; m < n; ++m) {
            RatSeries comp = series_compose(truncated(u, m + 1), truncated(v, m + 1));
            v.c_[m] = -comp.c_[m] / u.c_[1];
        }
        return v;
    }

private:
    std::vector<mpq_class> c_;
};

/// Power-series expansion of numerator/denominator to n terms; the
/// denominator needs a nonzero constant term.
inline RatSeries rational_series(const RatPoly& num, const RatPoly& den, std::size_t n) {
    const mpq_class d0 = den.coeff(0);
    if (d0 == 0)
        throw std::invalid_argument("rational_series: denominator constant term is zero");
    std::size_t deg = den.degree();
    std::vector<mpq_class> d(deg + 1);
    for (auto& [e, c] : den.terms) d[e] += c;
    RatSeries r(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class acc = num.coeff(j);
        for (std::size_t i = 1; i <= deg && i <= j; ++i)
            if (d[i] != 0) acc -= d[i] * r.coeff(j - i);
        r.set(j, acc / d0);
    }
    return r;
}

}  // namespace autoseq

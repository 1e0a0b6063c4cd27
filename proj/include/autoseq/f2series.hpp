#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

/// Truncated power series over F2, known exactly modulo X^trunc.
///
/// Coefficients are bit-packed 64 per word: the coefficient of X^i is bit
/// (i & 63) of word (i >> 6). Bits at positions >= trunc are kept zero.
/// Every operation returns trunc = min of the input truncations; nothing is
/// ever zero-extended, so an identity that only "holds" beyond the known
/// range cannot sneak through a check.
///
/// Values are immutable in practice: all operations below are pure and
/// return fresh series, so sharing across threads is safe.
class F2Series {
public:
    F2Series() = default;

    /// Zero series known mod X^trunc.
    explicit F2Series(std::size_t trunc)
        : trunc_(trunc), words_((trunc + 63) / 64, 0) {}

    static F2Series zero(std::size_t trunc) { return F2Series(trunc); }

    static F2Series one(std::size_t trunc) {
        F2Series s(trunc);
        if (trunc > 0) s.set(0, 1);
        return s;
    }

    /// The series X.
    static F2Series x(std::size_t trunc) { return monomial(1, trunc); }

    static F2Series monomial(std::size_t e, std::size_t trunc) {
        F2Series s(trunc);
        if (e < trunc) s.set(e, 1);
        return s;
    }

    static F2Series from_bits(std::span<const std::uint8_t> bits) {
        F2Series s(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & 1) s.set(i, 1);
        return s;
    }

    std::size_t trunc() const { return trunc_; }

    /// Coefficient of X^i; asking beyond the known range is a bug, not zero.
    int coeff(std::size_t i) const {
        if (i >= trunc_) throw std::out_of_range("F2Series::coeff: index beyond truncation");
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
    }

    void set(std::size_t i, int v) {
        if (i >= trunc_) throw std::out_of_range("F2Series::set: index beyond truncation");
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v & 1)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    bool is_zero() const {
        return std::all_of(words_.begin(), words_.end(),
                           [](std::uint64_t w) { return w == 0; });
    }

    /// Index of the lowest nonzero coefficient, or trunc() if none.
    std::size_t valuation() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return trunc_;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    std::vector<std::uint8_t> bits() const {
        std::vector<std::uint8_t> out(trunc_);
        for (std::size_t i = 0; i < trunc_; ++i)
            out[i] = static_cast<std::uint8_t>((words_[i >> 6] >> (i & 63)) & 1u);
        return out;
    }

    friend bool operator==(const F2Series& a, const F2Series& b) {
        return a.trunc_ == b.trunc_ && a.words_ == b.words_;
    }

    friend F2Series truncated(const F2Series& a, std::size_t n) {
        n = std::min(n, a.trunc_);
        F2Series r(n);
        std::copy_n(a.words_.begin(), r.words_.size(), r.words_.begin());
        r.mask_top();
        return r;
    }

    friend F2Series series_add(const F2Series& a, const F2Series& b) {
        const std::size_t n = std::min(a.trunc_, b.trunc_);
        F2Series r(n);
        for (std::size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] = a.words_[i] ^ b.words_[i];
        r.mask_top();
        return r;
    }

    friend F2Series series_mul(const F2Series& a, const F2Series& b) {
        const std::size_t n = std::min(a.trunc_, b.trunc_);
        // iterate over the set bits of the sparser factor
        const bool a_sparser = a.popcount() <= b.popcount();
        const F2Series& s = a_sparser ? a : b;
        const F2Series& t = a_sparser ? b : a;
        F2Series r(n);
        const std::size_t nw = r.words_.size();
        for (std::size_t w = 0; w < s.words_.size() && (w << 6) < n; ++w) {
            std::uint64_t bitsw = s.words_[w];
            while (bitsw) {
                const std::size_t p = (w << 6) + static_cast<std::size_t>(std::countr_zero(bitsw));
                bitsw &= bitsw - 1;
                if (p >= n) break;
                xor_shifted(r.words_, t.words_, p, nw);
            }
        }
        r.mask_top();
        return r;
    }

    /// S(X^stride), known mod X^min(cap, stride*trunc).
    friend F2Series substitute(const F2Series& a, std::size_t stride, std::size_t cap) {
        if (stride == 0) throw std::invalid_argument("substitute: stride must be positive");
        const std::size_t avail = (a.trunc_ > cap / stride) ? cap : a.trunc_ * stride;
        const std::size_t n = std::min(cap, avail);
        F2Series r(n);
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            std::uint64_t bitsw = a.words_[w];
            while (bitsw) {
                const std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bitsw));
                bitsw &= bitsw - 1;
                if (i > (n - 1) / stride && n > 0) break;
                const std::size_t e = i * stride;
                if (e < n) r.words_[e >> 6] |= std::uint64_t{1} << (e & 63);
            }
        }
        return r;
    }

    /// S^2 = S(X^2) in characteristic two.
    friend F2Series series_square(const F2Series& a) {
        return substitute(a, 2, a.trunc_);
    }

    /// Multiply by an exact polynomial given as an exponent list.
    friend F2Series mul_monomials(const F2Series& a, std::span<const std::size_t> exps) {
        F2Series r(a.trunc_);
        for (std::size_t e : exps) {
            if (e >= a.trunc_) continue;
            xor_shifted(r.words_, a.words_, e, r.words_.size());
        }
        r.mask_top();
        return r;
    }

    friend F2Series shift_up(const F2Series& a, std::size_t e) {
        const std::size_t ex[1] = {e};
        return mul_monomials(a, ex);
    }

    /// outer(inner) mod X^min(truncs); inner must have zero constant term.
    friend F2Series series_compose(const F2Series& outer, const F2Series& inner) {
        if (inner.trunc_ == 0)
            return F2Series(std::min(outer.trunc_, inner.trunc_));
        if (inner.coeff(0) != 0)
            throw std::invalid_argument("series_compose: inner constant term must be zero");
        const std::size_t n = std::min(outer.trunc_, inner.trunc_);
        return compose_rec(truncated(outer, n), truncated(inner, n), n);
    }

    /// Reciprocal: r with r*a = 1 mod X^trunc. Needs a(0) = 1.
    friend F2Series series_recip(const F2Series& a) {
        if (a.trunc_ == 0 || a.coeff(0) != 1)
            throw std::invalid_argument("series_recip: constant term must be 1");
        const std::size_t n = a.trunc_;
        F2Series r = one(1);
        std::size_t prec = 1;
        while (prec < n) {
            prec = std::min(2 * prec, n);
            F2Series ap = truncated(a, prec);
            F2Series rp = extend(r, prec);
            // r <- r + r*(1 + a*r)
            F2Series e = series_add(one(prec), series_mul(ap, rp));
            r = series_add(rp, series_mul(rp, e));
        }
        return r;
    }

    /// Compositional inverse: v with u(v) = v(u) = X mod X^trunc.
    ///
    /// Precision-doubling Newton lift; the post-condition u(v) = X is checked
    /// exactly before returning. Needs u(0) = 0 and u'(0) = 1.
    friend F2Series series_reversion(const F2Series& u) {
        reversion_precheck(u);
        const std::size_t n = u.trunc_;
        if (n <= 2) return truncated(x(2), n);

        // u'(X) = sum over odd i of u_i X^{i-1} = w(X)^2 with w_j = u_{2j+1}
        F2Series w((n + 1) / 2);
        for (std::size_t j = 0; 2 * j + 1 < n; ++j)
            if (u.coeff(2 * j + 1)) w.set(j, 1);

        F2Series v = x(2);
        std::size_t prec = 2;
        int guard = 0;
        for (;;) {
            prec = std::min(std::max(2 * prec - 1, std::size_t{3}), n);
            F2Series vp = extend(v, prec);
            F2Series up = truncated(u, prec);
            F2Series e = series_add(series_compose(up, vp), x(prec));
            if (prec == n && e.is_zero()) { v = vp; break; }
            // u'(v) = (w o v)^2, spread directly to the working precision
            F2Series du = substitute(series_compose(truncated(w, prec), vp), 2, prec);
            v = series_add(vp, series_mul(e, series_recip(du)));
            if (++guard > 200)
                throw std::logic_error("series_reversion: no convergence");
        }
        return v;
    }

    /// Reference reversion: solves one coefficient of u(v) = X at a time.
    /// Quadratic-ish in trunc; meant for modest truncations and cross-checks.
    friend F2Series reversion_incremental(const F2Series& u) {
        reversion_precheck(u);
        const std::size_t n = u.trunc_;
        F2Series v(n);
        if (n > 1) v.set(1, 1);
        for (std::size_t m = 2; m < n; ++m) {
            // coefficient m of u(v) with v_m still zero; pivot u_1 = 1
            F2Series c = series_compose(truncated(u, m + 1), truncated(v, m + 1));
            if (c.coeff(m)) v.set(m, 1);
        }
        return v;
    }

    /// Zero-extend the known range (an explicit act, never implicit).
    friend F2Series extend(const F2Series& a, std::size_t n) {
        if (n <= a.trunc_) return truncated(a, n);
        F2Series r(n);
        std::copy(a.words_.begin(), a.words_.end(), r.words_.begin());
        return r;
    }

private:
    void mask_top() {
        if (trunc_ & 63) words_.back() &= (std::uint64_t{1} << (trunc_ & 63)) - 1;
    }

    static void reversion_precheck(const F2Series& u) {
        if (u.trunc_ < 2)
            throw std::invalid_argument("reversion: need the series at least mod X^2");
        if (u.coeff(0) != 0)
            throw std::invalid_argument("reversion: constant term must be zero");
        if (u.coeff(1) != 1)
            throw std::invalid_argument("reversion: linear coefficient must be invertible");
    }

    // acc ^= src << shift, limited to nw words of acc
    static void xor_shifted(std::vector<std::uint64_t>& acc,
                            const std::vector<std::uint64_t>& src,
                            std::size_t shift, std::size_t nw) {
        const std::size_t ws = shift >> 6;
        const unsigned bs = static_cast<unsigned>(shift & 63);
        if (bs == 0) {
            for (std::size_t i = 0; i + ws < nw && i < src.size(); ++i)
                acc[i + ws] ^= src[i];
        } else {
            for (std::size_t i = 0; i + ws < nw && i < src.size(); ++i) {
                acc[i + ws] ^= src[i] << bs;
                if (i + ws + 1 < nw) acc[i + ws + 1] ^= src[i] >> (64 - bs);
            }
        }
    }

    // f(g) mod X^n via the even/odd split: f = f0(X^2) + X f1(X^2), so
    // f(g) = (f0 o g)(X^2-spread) + g * (f1 o g)(X^2-spread), and in char 2
    // spreading a half-truncation result is exact. Two full multiplications
    // in total over the whole recursion.
    static F2Series compose_rec(const F2Series& f, const F2Series& g, std::size_t n) {
        if (n == 0) return F2Series(0);
        if (f.trunc_ <= 1) {
            F2Series r(n);
            if (f.trunc_ == 1 && f.coeff(0)) r.set(0, 1);
            return r;
        }
        F2Series f0((f.trunc_ + 1) / 2), f1(f.trunc_ / 2);
        for (std::size_t i = 0; i < f.trunc_; ++i)
            if (f.coeff(i)) {
                if (i & 1) f1.set(i >> 1, 1); else f0.set(i >> 1, 1);
            }
        const std::size_t h = (n + 1) / 2;
        F2Series a = compose_rec(f0, truncated(g, h), h);
        F2Series b = compose_rec(f1, truncated(g, h), h);
        F2Series r = substitute(a, 2, n);
        r = extend(r, n);
        F2Series bs = extend(substitute(b, 2, n), n);
        return series_add(r, series_mul(truncated(g, n), bs));
    }

    std::size_t trunc_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace autoseq

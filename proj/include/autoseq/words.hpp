#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq::words {

using std::size_t;
using std::uint8_t;
using Word = std::vector<uint8_t>;

/// Endomorphism of a free monoid over letters 0..alphabet-1.
struct Morphism {
    size_t alphabet = 0;
    std::vector<Word> images;  // one per letter

    void validate() const {
        if (images.size() != alphabet)
            throw std::invalid_argument("Morphism: one image per letter required");
        for (const Word& w : images)
            for (uint8_t c : w)
                if (c >= alphabet) throw std::invalid_argument("Morphism: image letter out of range");
    }

    bool prolongable_at(uint8_t seed) const {
        return seed < alphabet && images[seed].size() >= 2 && images[seed][0] == seed;
    }
};

inline Word apply(const Morphism& m, std::span<const uint8_t> w) {
    Word out;
    for (uint8_t c : w) {
        const Word& img = m.images[c];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

/// m^e under composition.
inline Morphism power(const Morphism& m, unsigned e) {
    m.validate();
    Morphism r;
    r.alphabet = m.alphabet;
    r.images.resize(m.alphabet);
    for (size_t c = 0; c < m.alphabet; ++c) r.images[c] = {static_cast<uint8_t>(c)};
    for (unsigned t = 0; t < e; ++t)
        for (size_t c = 0; c < m.alphabet; ++c) r.images[c] = apply(m, r.images[c]);
    return r;
}

/// First `len` letters of the unique fixed point of m starting at seed.
inline Word fixed_point(const Morphism& m, uint8_t seed, size_t len) {
    m.validate();
    if (!m.prolongable_at(seed))
        throw std::invalid_argument("fixed_point: morphism not prolongable at seed");
    Word w{seed};
    size_t head = 0;
    while (w.size() < len) {
        if (head >= w.size()) throw std::logic_error("fixed_point: expansion stalled");
        const Word& img = m.images[w[head]];
        if (head == 0) {
            w.insert(w.end(), img.begin() + 1, img.end());  // w already starts with seed
        } else {
            w.insert(w.end(), img.begin(), img.end());
        }
        ++head;
    }
    w.resize(len);
    return w;
}

/// Letter-to-letter coding.
inline Word code(std::span<const uint8_t> w, std::span<const uint8_t> table) {
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= table.size()) throw std::invalid_argument("code: letter out of range");
        out[i] = table[w[i]];
    }
    return out;
}

// ---------------------------------------------------------------------------
// the morphisms in play
// ---------------------------------------------------------------------------

/// 0 -> 01, 1 -> 0 (Fibonacci morphism).
inline Morphism fib_morphism() { return {2, {{0, 1}, {0}}}; }

/// 0 -> 1, 1 -> 10.
inline Morphism fib_morphism_swapped() { return {2, {{1}, {1, 0}}}; }

/// Letters x_0..x_{r-1}; x_i -> word Delta_i (see delta_word below).
inline Morphism delta_morphism(int r) {
    if (r < 2) throw std::invalid_argument("delta_morphism: r must be >= 2");
    Morphism m;
    m.alphabet = static_cast<size_t>(r);
    m.images.resize(m.alphabet);
    for (int i = 0; i + 1 < r; ++i) m.images[i] = {static_cast<uint8_t>(i + 1)};
    m.images[r - 1] = {0, static_cast<uint8_t>(r - 1)};
    return m;
}

/// Six-letter morphism whose coded fixed point is the parity word of the
/// zero positions of the Baum-Sweet sequence. Letters a..f are 0..5.
inline Morphism h_morphism() {
    return {6, {
        {1, 2},     // a -> bc
        {0, 3},     // b -> ad
        {4, 1, 2},  // c -> ebc
        {3, 4},     // d -> de
        {3, 4},     // e -> de
        {5, 1, 2},  // f -> fbc
    }};
}

inline Word h_coding_table() { return {0, 1, 0, 0, 1, 0}; }  // a,c,d,f -> 0; b,e -> 1

// ---------------------------------------------------------------------------
// word families
// ---------------------------------------------------------------------------

/// Lambda_0 = 1, Lambda_1 = 01, Lambda_n = Lambda_{n-2} Lambda_{n-1}.
inline Word lambda_word(size_t n) {
    std::vector<Word> lam{{1}, {0, 1}};
    for (size_t i = 2; i <= n; ++i) {
        Word w = lam[i - 2];
        w.insert(w.end(), lam[i - 1].begin(), lam[i - 1].end());
        lam.push_back(std::move(w));
    }
    return lam[n];
}

inline Word lambda_concat(size_t len) {
    Word out;
    Word prev{1}, cur{0, 1};
    out.insert(out.end(), prev.begin(), prev.end());
    out.insert(out.end(), cur.begin(), cur.end());
    while (out.size() < len) {
        Word next = prev;
        next.insert(next.end(), cur.begin(), cur.end());
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    out.resize(len);
    return out;
}

/// Delta_i = x_{i+1} for i < r-1, Delta_{r-1} = x_0 x_{r-1},
/// Delta_n = Delta_{n-r} Delta_{n-1}.
inline Word delta_word(int r, size_t n) {
    if (r < 2) throw std::invalid_argument("delta_word: r must be >= 2");
    std::vector<Word> d;
    for (int i = 0; i + 1 < r; ++i) d.push_back({static_cast<uint8_t>(i + 1)});
    d.push_back({0, static_cast<uint8_t>(r - 1)});
    for (size_t i = static_cast<size_t>(r); i <= n; ++i) {
        Word w = d[i - r];
        w.insert(w.end(), d[i - 1].begin(), d[i - 1].end());
        d.push_back(std::move(w));
    }
    return d[n];
}

inline Word delta_concat(int r, size_t len) {
    Word out;
    for (size_t n = 0; out.size() < len; ++n) {
        const Word w = delta_word(r, n);
        out.insert(out.end(), w.begin(), w.end());
        if (n > 64) throw std::logic_error("delta_concat: runaway");
    }
    out.resize(len);
    return out;
}

/// psi coding for the Delta alphabet: x_0 -> 0, the rest -> 1.
inline Word psi(std::span<const uint8_t> w) {
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[i] == 0 ? 0 : 1;
    return out;
}

/// H_0 = 0, H_1 = 10, H_{n+2} = H_n (01)^{2^n} H_{n+1} (applied from n = 0,
/// the only reading that defines H_2; validated against the scan route).
inline Word h_word(size_t n) {
    std::vector<Word> h{{0}, {1, 0}};
    for (size_t i = 2; i <= n; ++i) {
        Word w = h[i - 2];
        const size_t reps = size_t{1} << (i - 2);
        for (size_t t = 0; t < reps; ++t) {
            w.push_back(0);
            w.push_back(1);
        }
        w.insert(w.end(), h[i - 1].begin(), h[i - 1].end());
        h.push_back(std::move(w));
    }
    return h[n];
}

inline Word h_concat(size_t len) {
    Word out;
    Word prev{0}, cur{1, 0};
    out.insert(out.end(), prev.begin(), prev.end());
    out.insert(out.end(), cur.begin(), cur.end());
    size_t n = 0;  // next to build is H_{n+2}
    while (out.size() < len) {
        Word next = prev;
        const size_t reps = size_t{1} << n;
        for (size_t t = 0; t < reps; ++t) {
            next.push_back(0);
            next.push_back(1);
        }
        next.insert(next.end(), cur.begin(), cur.end());
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(cur);
        cur = std::move(next);
        ++n;
    }
    out.resize(len);
    return out;
}

// ---------------------------------------------------------------------------
// frequencies, exactly
// ---------------------------------------------------------------------------

inline mpq_class letter_frequency(std::span<const uint8_t> w, uint8_t letter) {
    if (w.empty()) throw std::invalid_argument("letter_frequency: empty word");
    size_t count = 0;
    for (uint8_t c : w) count += (c == letter);
    mpq_class q(static_cast<unsigned long>(count), static_cast<unsigned long>(w.size()));
    q.canonicalize();
    return q;
}

/// Exact sign of f(q) = q^r + q - 1; the unique root in (0,1) separates
/// negative from positive.
inline int sign_xr_poly(const mpq_class& q, int r) {
    mpq_class p = 1;
    for (int i = 0; i < r; ++i) p *= q;
    const mpq_class v = p + q - 1;
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
}

/// |value - g| < tol for the root g of x^r + x - 1 in (0,1), decided without
/// floating point: g lies in (lo, hi) iff f(lo) < 0 < f(hi).
inline bool within_root_xr(const mpq_class& value, int r, const mpq_class& tol) {
    if (r < 2) throw std::invalid_argument("within_root_xr: r must be >= 2");
    const mpq_class lo = value - tol, hi = value + tol;
    return sign_xr_poly(lo, r) < 0 && sign_xr_poly(hi, r) > 0;
}

/// |value - (sqrt(5)-1)/2| < tol, exactly: compare (2q+1)^2 with 5.
inline bool within_golden(const mpq_class& value, const mpq_class& tol) {
    auto below_golden = [](const mpq_class& q) {  // q < (sqrt(5)-1)/2
        const mpq_class t = 2 * q + 1;
        if (t <= 0) return true;
        return t * t < 5;
    };
    return below_golden(value - tol) && !below_golden(value + tol);
}

/// Bisection approximation of the root of x^r + x - 1 in (0, 1).
inline double real_root_xr(int r, double tol) {
    if (r < 2) throw std::invalid_argument("real_root_xr: r must be >= 2");
    if (tol <= 0) throw std::invalid_argument("real_root_xr: tol must be positive");
    mpq_class lo = 0, hi = 1;
    const mpq_class qtol(tol);
    while (hi - lo >= qtol) {
        const mpq_class mid = (lo + hi) / 2;
        if (sign_xr_poly(mid, r) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return mpq_class((lo + hi) / 2).get_d();
}

}  // namespace autoseq::words

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "f2series.hpp"

namespace autoseq::seq {

using std::int64_t;
using std::size_t;
using std::uint64_t;

// ---------------------------------------------------------------------------
// Baum-Sweet family: b_n = 1 iff every block of 0's in the binary expansion
// of n has even length; the r-variant asks for length divisible by r.
// ---------------------------------------------------------------------------

/// Digit-scan definition.
inline int baum_sweet_r_scan(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("baum_sweet_r: r must be >= 2");
    if (n == 0) return 1;
    while (n) {
        int run = 0;
        while ((n & 1) == 0) { ++run; n >>= 1; }
        if (run % r != 0) return 0;
        while (n & 1) n >>= 1;
    }
    return 1;
}

inline int baum_sweet_scan(uint64_t n) { return baum_sweet_r_scan(2, n); }

/// Recurrence route: b_0 = 1, b_{2n+1} = b_{4n} = b_n, b_{4n+2} = 0.
inline int baum_sweet_recur(uint64_t n) {
    while (n) {
        if (n & 1) { n >>= 1; continue; }
        if ((n & 3) == 2) return 0;
        n >>= 2;
    }
    return 1;
}

/// Recurrence route for the r-variant: b_{2^r n} = b_{2n+1} = b_n and
/// b_{2^i n + 2^(i-1)} = 0 for i = 2..r.
inline int baum_sweet_r_recur(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("baum_sweet_r: r must be >= 2");
    while (n) {
        if (n & 1) { n >>= 1; continue; }
        const int v = std::countr_zero(n);
        if (v < r) return 0;
        n >>= r;
    }
    return 1;
}

inline std::vector<std::uint8_t> baum_sweet_r_prefix(int r, size_t len) {
    if (r < 2) throw std::invalid_argument("baum_sweet_r: r must be >= 2");
    std::vector<std::uint8_t> b(len);
    if (len > 0) b[0] = 1;
    for (uint64_t n = 1; n < len; ++n) {
        if (n & 1) {
            b[n] = b[n >> 1];
        } else {
            const int v = std::countr_zero(n);
            b[n] = (v < r) ? 0 : b[n >> r];
        }
    }
    return b;
}

inline std::vector<std::uint8_t> baum_sweet_prefix(size_t len) {
    return baum_sweet_r_prefix(2, len);
}

// ---------------------------------------------------------------------------
// Thue-Morse
// ---------------------------------------------------------------------------

inline int thue_morse_scan(uint64_t n) { return std::popcount(n) & 1; }

inline int thue_morse_recur(uint64_t n) {
    int flip = 0;
    while (n) {
        if (n & 1) flip ^= 1;
        n >>= 1;
    }
    return flip;
}

inline std::vector<std::uint8_t> thue_morse_prefix(size_t len) {
    std::vector<std::uint8_t> t(len);
    for (size_t n = 1; n < len; ++n) t[n] = t[n >> 1] ^ (n & 1);
    return t;
}

// ---------------------------------------------------------------------------
// Moser-de Bruijn and its base-2^r variant
// ---------------------------------------------------------------------------

/// m_0 = 0, m_{2n} = 2^r m_n, m_{2n+1} = 2^r m_n + 1.
inline uint64_t moser_r_recur(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("moser_r: r must be >= 2");
    const int bits = n ? 64 - std::countl_zero(n) : 0;
    if (static_cast<int64_t>(bits) * r > 63)
        throw std::overflow_error("moser_r: value exceeds 64 bits");
    uint64_t m = 0;
    for (int i = bits - 1; i >= 0; --i) m = (m << r) | ((n >> i) & 1);
    return m;
}

inline uint64_t moser_recur(uint64_t n) { return moser_r_recur(2, n); }

/// Independent route: all naturals below `limit` whose base-2^r digits are
/// 0/1, in increasing order.
inline std::vector<uint64_t> moser_r_enumerate(int r, uint64_t limit) {
    if (r < 2) throw std::invalid_argument("moser_r: r must be >= 2");
    std::vector<uint64_t> out;
    std::vector<uint64_t> powers;
    for (uint64_t p = 1; p < limit; ) {
        powers.push_back(p);
        if (p > (limit >> r)) break;
        p <<= r;
    }
    out.push_back(0);
    for (uint64_t p : powers) {
        const size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i)
            if (out[i] + p < limit) out.push_back(out[i] + p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff n is a sum of distinct powers of 2^r.
inline bool is_moser_r_value(int r, uint64_t n) {
    const uint64_t digit_mask = (uint64_t{1} << r) - 1;
    while (n) {
        if ((n & digit_mask) > 1) return false;
        n >>= r;
    }
    return true;
}

// ---------------------------------------------------------------------------
// p: the inverse of the 0-patched series is ultimately constant
// ---------------------------------------------------------------------------

/// p_n = 0 iff n even and n < 2^r, else 1. r = 2 gives zeros exactly at 0, 2.
inline int p_r_closed(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("p_r: r must be >= 2");
    return (n % 2 == 0 && n < (uint64_t{1} << r)) ? 0 : 1;
}

inline int p_closed(uint64_t n) { return p_r_closed(2, n); }

// ---------------------------------------------------------------------------
// q: coefficients of the inverse of the shift-patched series
// ---------------------------------------------------------------------------

/// q_0 = 0, q_1 = 1, q_{4n} = q_{4n+3} = 0, q_{4n+1} = q_{4n+2} = q_{n+1}.
inline int q_recur(uint64_t n) {
    for (;;) {
        if (n <= 1) return static_cast<int>(n);
        const uint64_t res = n & 3;
        if (res == 0 || res == 3) return 0;
        n = (n >> 2) + 1;
    }
}

/// General form with the index-shift recursion q_{2^r n + i} = q_{n+1} for
/// i in {1,2} and = 0 otherwise.
inline int q_r_recur(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("q_r: r must be >= 2");
    for (;;) {
        if (n <= 1) return static_cast<int>(n);
        const uint64_t res = n & ((uint64_t{1} << r) - 1);
        if (res != 1 && res != 2) return 0;
        n = (n >> r) + 1;
    }
}

/// The same recursion without the index shift (q_n in place of q_{n+1}).
/// Kept around as a falsifiable variant; it contradicts the inverse-series
/// coefficients, and the verify registry expects it to fail.
inline int q_r_recur_unshifted(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("q_r: r must be >= 2");
    for (;;) {
        if (n <= 1) return static_cast<int>(n);
        const uint64_t res = n & ((uint64_t{1} << r) - 1);
        if (res != 1 && res != 2) return 0;
        n = n >> r;
    }
}

inline std::vector<std::uint8_t> q_prefix(size_t len) {
    std::vector<std::uint8_t> q(len);
    if (len > 1) q[1] = 1;
    for (uint64_t n = 2; n < len; ++n) {
        const uint64_t res = n & 3;
        q[n] = (res == 1 || res == 2) ? q[(n >> 2) + 1] : 0;
    }
    return q;
}

inline std::vector<std::uint8_t> q_r_prefix(int r, size_t len) {
    if (r < 2) throw std::invalid_argument("q_r: r must be >= 2");
    std::vector<std::uint8_t> q(len);
    if (len > 1) q[1] = 1;
    for (uint64_t n = 2; n < len; ++n) {
        const uint64_t res = n & ((uint64_t{1} << r) - 1);
        q[n] = (res == 1 || res == 2) ? q[(n >> r) + 1] : 0;
    }
    return q;
}

// ---------------------------------------------------------------------------
// u: positions of 1 in q. Closed against the Moser value by u_n = m_n + 1.
// ---------------------------------------------------------------------------

/// u_0 = 1, u_{2n} = 4 u_n - 3, u_{2n+1} = 4 u_n - 2.
inline uint64_t u_recur(uint64_t n) {
    if (n == 0) return 1;
    return 4 * u_recur(n >> 1) - 3 + (n & 1);
}

/// u_0 = 1, u_{2n} = 2^r u_n - 2^r + 1, u_{2n+1} = 2^r u_n - 2^r + 2.
inline uint64_t u_r_recur(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("u_r: r must be >= 2");
    if (n == 0) return 1;
    const uint64_t base = uint64_t{1} << r;
    const uint64_t parent = u_r_recur(r, n >> 1);
    if (parent > (std::numeric_limits<uint64_t>::max() - base) / base)
        throw std::overflow_error("u_r: value exceeds 64 bits");
    return base * parent - base + 1 + (n & 1);
}

/// The recurrence without the 2^r factor on the parent term; contradicts
/// u = m + 1 already at n = 1 for r > 2. Registered as an expected failure.
inline int64_t u_r_recur_unscaled(int r, uint64_t n) {
    if (r < 2) throw std::invalid_argument("u_r: r must be >= 2");
    if (n == 0) return 1;
    const int64_t base = int64_t{1} << r;
    return u_r_recur_unscaled(r, n >> 1) - base + 1 + static_cast<int64_t>(n & 1);
}

// ---------------------------------------------------------------------------
// a: positions of 1 in the inverse of Thue-Morse, with 0 prepended
// ---------------------------------------------------------------------------

/// a_0 = 0, a_1 = 1, a_2 = 2, then
///   a_{4n} = a_{4n-1} + 1,  a_{4n+1} = a_{4n-1} + 2,  a_{4n+2} = a_{4n-1} + 3,
///   a_{8n+3} = a_{8n} + 7,  a_{8n+7} = 4 a_{4n+3} + 3.
inline uint64_t a_recur(uint64_t n) {
    static thread_local std::map<uint64_t, uint64_t> memo;
    if (n <= 2) return n;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    uint64_t res;
    const uint64_t r4 = n & 3;
    if (r4 == 0)      res = a_recur(n - 1) + 1;
    else if (r4 == 1) res = a_recur(n - 2) + 2;
    else if (r4 == 2) res = a_recur(n - 3) + 3;
    else if ((n & 7) == 3) res = a_recur(n - 3) + 7;
    else              res = 4 * a_recur(n / 2) + 3;  // n = 8k+7 -> 4 a_{4k+3} + 3
    memo.emplace(n, res);
    return res;
}

// ---------------------------------------------------------------------------
// w, s, s-tilde
// ---------------------------------------------------------------------------

/// First `count` naturals that are not sums of distinct powers of 2^r,
/// increasing. These are the w-values: w_n = v_{n+1} - 1.
inline std::vector<uint64_t> w_r_prefix(int r, size_t count) {
    if (r < 2) throw std::invalid_argument("w_r: r must be >= 2");
    std::vector<uint64_t> w;
    w.reserve(count);
    for (uint64_t n = 0; w.size() < count; ++n)
        if (!is_moser_r_value(r, n)) w.push_back(n);
    return w;
}

/// s_n = ((w_n - n) / 2) mod 2. The difference w_n - n is always even; an
/// odd value signals a bug, not a data case.
inline std::vector<std::uint8_t> s_r_prefix(int r, size_t count) {
    const std::vector<uint64_t> w = w_r_prefix(r, count);
    std::vector<std::uint8_t> s(count);
    for (size_t n = 0; n < count; ++n) {
        const uint64_t diff = w[n] - n;
        if (diff & 1) throw std::logic_error("s_r: w_n - n is odd");
        s[n] = static_cast<std::uint8_t>((diff >> 1) & 1);
    }
    return s;
}

/// All values below `limit` of the form sum of (2^(r*n_i) - 2^(n_i)) over a
/// strictly increasing (possibly empty) index set with n_i >= 2. Sorted.
inline std::vector<uint64_t> s_tilde_support(int r, uint64_t limit) {
    if (r < 2) throw std::invalid_argument("s_tilde: r must be >= 2");
    std::vector<uint64_t> vals{0};
    for (int i = 2; ; ++i) {
        if (static_cast<int64_t>(i) * r > 62) break;
        const uint64_t term = (uint64_t{1} << (r * i)) - (uint64_t{1} << i);
        if (term >= limit) break;
        const size_t sz = vals.size();
        for (size_t k = 0; k < sz; ++k)
            if (vals[k] + term < limit) vals.push_back(vals[k] + term);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

inline std::vector<std::uint8_t> s_tilde_prefix(int r, size_t count) {
    std::vector<std::uint8_t> st(count);
    for (uint64_t v : s_tilde_support(r, count)) st[v] = 1;
    return st;
}

/// s via the representation criterion: n = (sum of 2^(r n_i) - 2^(n_i)) + j
/// with j in {0, .., 2^r - 3}.
inline std::vector<std::uint8_t> s_r_prefix_by_representation(int r, size_t count) {
    std::vector<std::uint8_t> s(count);
    const uint64_t jmax = (uint64_t{1} << r) - 3;
    for (uint64_t core : s_tilde_support(r, count))
        for (uint64_t j = 0; j <= jmax && core + j < count; ++j) s[core + j] = 1;
    return s;
}

/// s-tilde from s: equal where (2^r - 2) divides n, zero elsewhere.
inline std::vector<std::uint8_t> s_tilde_from_s(int r, std::span<const std::uint8_t> s) {
    const uint64_t d = (uint64_t{1} << r) - 2;
    std::vector<std::uint8_t> st(s.size());
    for (size_t n = 0; n < s.size(); ++n) st[n] = (n % d == 0) ? s[n] : 0;
    return st;
}

// ---------------------------------------------------------------------------
// characteristic positions, Fibonacci
// ---------------------------------------------------------------------------

/// Strictly increasing positions below bits.size() where bits == value;
/// optionally with an extra 0 prepended (deduplicated if position 0 already
/// qualifies).
inline std::vector<uint64_t> char_positions(std::span<const std::uint8_t> bits, int value,
                                            bool prepend_zero = false) {
    if (bits.empty()) throw std::invalid_argument("char_positions: empty prefix");
    std::vector<uint64_t> out;
    if (prepend_zero && bits[0] != value) out.push_back(0);
    for (uint64_t i = 0; i < bits.size(); ++i)
        if (bits[i] == value) out.push_back(i);
    return out;
}

/// f_0 = 0, f_1 = f_2 = 1. This indexing is pinned by the word-length
/// identities it has to satisfy (see the words module).
inline uint64_t fibonacci(uint64_t n) {
    if (n > 92) throw std::overflow_error("fibonacci: value exceeds 64 bits");
    uint64_t a = 0, b = 1;
    for (uint64_t i = 0; i < n; ++i) {
        const uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// ---------------------------------------------------------------------------
// SeqId: parse/print and the one-stop prefix generator
// ---------------------------------------------------------------------------

enum class SeqName {
    baum_sweet, baum_sweet_r, b_prime, b_dprime, thue_morse,
    moser_de_bruijn, moser_r, p_seq, q_seq, q_seq_r, c_seq, a_seq, d_seq,
    u_seq, u_seq_r, v_seq, v_seq_r, w_seq_r, s_seq_r, s_tilde_r,
    l_seq, l_seq_r, h_seq, fibonacci_numbers,
};

struct SeqId {
    SeqName name;
    int r = 0;  // >= 2 for the _r families, 0 otherwise
};

namespace detail {
inline const std::vector<std::pair<std::string_view, SeqName>>& seq_names() {
    static const std::vector<std::pair<std::string_view, SeqName>> table = {
        {"baum_sweet", SeqName::baum_sweet},
        {"baum_sweet_r", SeqName::baum_sweet_r},
        {"b_prime", SeqName::b_prime},
        {"b_dprime", SeqName::b_dprime},
        {"thue_morse", SeqName::thue_morse},
        {"moser_de_bruijn", SeqName::moser_de_bruijn},
        {"moser_r", SeqName::moser_r},
        {"p_seq", SeqName::p_seq},
        {"q_seq", SeqName::q_seq},
        {"q_seq_r", SeqName::q_seq_r},
        {"c_seq", SeqName::c_seq},
        {"a_seq", SeqName::a_seq},
        {"d_seq", SeqName::d_seq},
        {"u_seq", SeqName::u_seq},
        {"u_seq_r", SeqName::u_seq_r},
        {"v_seq", SeqName::v_seq},
        {"v_seq_r", SeqName::v_seq_r},
        {"w_seq_r", SeqName::w_seq_r},
        {"s_seq_r", SeqName::s_seq_r},
        {"s_tilde_r", SeqName::s_tilde_r},
        {"l_seq", SeqName::l_seq},
        {"l_seq_r", SeqName::l_seq_r},
        {"h_seq", SeqName::h_seq},
        {"fibonacci_numbers", SeqName::fibonacci_numbers},
    };
    return table;
}

inline bool takes_r(SeqName n) {
    switch (n) {
        case SeqName::baum_sweet_r: case SeqName::moser_r: case SeqName::q_seq_r:
        case SeqName::u_seq_r: case SeqName::v_seq_r: case SeqName::w_seq_r:
        case SeqName::s_seq_r: case SeqName::s_tilde_r: case SeqName::l_seq_r:
            return true;
        default:
            return false;
    }
}
}  // namespace detail

/// Parses "name" or "name:r", e.g. "baum_sweet_r:3".
inline SeqId parse_seqid(std::string_view text) {
    std::string_view name = text;
    int r = 0;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        name = text.substr(0, colon);
        const std::string rstr(text.substr(colon + 1));
        try {
            size_t used = 0;
            r = std::stoi(rstr, &used);
            if (used != rstr.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("bad sequence parameter: '" + rstr + "'");
        }
    }
    for (const auto& [n, id] : detail::seq_names()) {
        if (n != name) continue;
        if (detail::takes_r(id)) {
            if (r < 2) throw std::invalid_argument(
                "sequence '" + std::string(name) + "' needs a parameter r >= 2 (name:r)");
            return {id, r};
        }
        if (r != 0) throw std::invalid_argument(
            "sequence '" + std::string(name) + "' takes no parameter");
        return {id, 0};
    }
    throw std::invalid_argument("unknown sequence: '" + std::string(text) + "'");
}

inline std::string to_string(SeqId id) {
    for (const auto& [n, nm] : detail::seq_names())
        if (nm == id.name)
            return detail::takes_r(nm) ? std::string(n) + ":" + std::to_string(id.r)
                                       : std::string(n);
    throw std::logic_error("to_string: unmapped sequence id");
}

struct Prefix {
    SeqId id;
    std::vector<int64_t> values;

    size_t len() const { return values.size(); }
};

namespace detail {

inline std::vector<int64_t> widen(const std::vector<std::uint8_t>& v) {
    return std::vector<int64_t>(v.begin(), v.end());
}

inline std::vector<int64_t> widen(const std::vector<uint64_t>& v) {
    std::vector<int64_t> out;
    out.reserve(v.size());
    for (uint64_t x : v) {
        if (x > uint64_t(std::numeric_limits<int64_t>::max()))
            throw std::overflow_error("prefix value exceeds 63 bits");
        out.push_back(static_cast<int64_t>(x));
    }
    return out;
}

/// Positions of `value` in the Baum-Sweet r-variant, grown until `count`
/// positions are known.
inline std::vector<uint64_t> bs_positions(int r, int value, size_t count) {
    size_t scan = std::max<size_t>(64, 4 * count);
    for (;;) {
        const auto bits = baum_sweet_r_prefix(r, scan);
        std::vector<uint64_t> pos = char_positions(bits, value);
        if (pos.size() >= count) {
            pos.resize(count);
            return pos;
        }
        if (scan > (size_t{1} << 34)) throw std::overflow_error("bs_positions: prefix too large");
        scan *= 2;
    }
}

inline std::vector<std::uint8_t> c_prefix(size_t len) {
    std::vector<std::uint8_t> t(std::max<size_t>(len, 2));
    for (size_t n = 1; n < t.size(); ++n) t[n] = t[n >> 1] ^ (n & 1);
    const F2Series c = series_reversion(F2Series::from_bits(t));
    auto bits = c.bits();
    bits.resize(len);
    return bits;
}

}  // namespace detail

/// Prefix of any sequence by id. Position, gap and 0/1 families come out of
/// their defining route; cross-checking routes live in the verify module.
inline Prefix generate(SeqId id, size_t len) {
    using detail::widen;
    std::vector<int64_t> v;
    switch (id.name) {
        case SeqName::baum_sweet: v = widen(baum_sweet_prefix(len)); break;
        case SeqName::baum_sweet_r: v = widen(baum_sweet_r_prefix(id.r, len)); break;
        case SeqName::b_prime: {
            auto b = baum_sweet_prefix(len);
            if (!b.empty()) b[0] = 0;
            v = widen(b);
            break;
        }
        case SeqName::b_dprime: {
            auto b = baum_sweet_prefix(len);
            std::vector<std::uint8_t> d(len);
            for (size_t n = 1; n < len; ++n) d[n] = b[n - 1];
            v = widen(d);
            break;
        }
        case SeqName::thue_morse: v = widen(thue_morse_prefix(len)); break;
        case SeqName::moser_de_bruijn:
        case SeqName::moser_r: {
            const int r = id.name == SeqName::moser_r ? id.r : 2;
            std::vector<uint64_t> m(len);
            for (size_t n = 0; n < len; ++n) m[n] = moser_r_recur(r, n);
            v = widen(m);
            break;
        }
        case SeqName::p_seq: {
            std::vector<std::uint8_t> p(len);
            for (size_t n = 0; n < len; ++n) p[n] = static_cast<std::uint8_t>(p_closed(n));
            v = widen(p);
            break;
        }
        case SeqName::q_seq: v = widen(q_prefix(len)); break;
        case SeqName::q_seq_r: v = widen(q_r_prefix(id.r, len)); break;
        case SeqName::c_seq: v = widen(detail::c_prefix(len)); break;
        case SeqName::a_seq: {
            std::vector<uint64_t> a(len);
            for (size_t n = 0; n < len; ++n) a[n] = a_recur(n);
            v = widen(a);
            break;
        }
        case SeqName::d_seq: {
            // zeros of the Thue-Morse inverse, position 0 excluded
            const size_t scan = 2 * len + 64;
            auto c = detail::c_prefix(scan);
            std::vector<uint64_t> d;
            for (uint64_t i = 1; i < scan && d.size() < len; ++i)
                if (!c[i]) d.push_back(i);
            if (d.size() < len) throw std::logic_error("d_seq: scan window too small");
            v = widen(d);
            break;
        }
        case SeqName::u_seq:
        case SeqName::u_seq_r: {
            const int r = id.name == SeqName::u_seq_r ? id.r : 2;
            std::vector<uint64_t> u(len);
            for (size_t n = 0; n < len; ++n) u[n] = u_r_recur(r, n);
            v = widen(u);
            break;
        }
        case SeqName::v_seq:
        case SeqName::v_seq_r: {
            const int r = id.name == SeqName::v_seq_r ? id.r : 2;
            // zeros of q^(r); ones thin out, so a linear window suffices
            size_t scan = 2 * len + 64;
            for (;;) {
                const auto q = q_r_prefix(r, scan);
                std::vector<uint64_t> z = char_positions(q, 0);
                if (z.size() >= len) {
                    z.resize(len);
                    v = widen(z);
                    break;
                }
                scan *= 2;
            }
            break;
        }
        case SeqName::w_seq_r: v = widen(w_r_prefix(id.r, len)); break;
        case SeqName::s_seq_r: v = widen(s_r_prefix(id.r, len)); break;
        case SeqName::s_tilde_r: v = widen(s_tilde_prefix(id.r, len)); break;
        case SeqName::l_seq: v = widen(detail::bs_positions(2, 1, len)); break;
        case SeqName::l_seq_r: v = widen(detail::bs_positions(id.r, 1, len)); break;
        case SeqName::h_seq: v = widen(detail::bs_positions(2, 0, len)); break;
        case SeqName::fibonacci_numbers: {
            std::vector<uint64_t> f(len);
            for (size_t n = 0; n < len; ++n) f[n] = fibonacci(n);
            v = widen(f);
            break;
        }
    }
    return Prefix{id, std::move(v)};
}

}  // namespace autoseq::seq

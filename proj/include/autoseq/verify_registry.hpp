#pragma once

// Check registry. Each entry pairs a construction with an independent route
// to the same values and reports the smallest violation it can find. Bounds
// come in two profiles: quick stays at or below 2^12 / 10^4, full uses the
// documented ranges.

#include "verify.hpp"

namespace autoseq::verify {

namespace detail {

inline size_t n_ident(bool full) { return full ? 65536 : 4096; }   // series identities
inline size_t n_round(bool full) { return full ? 16384 : 2048; }   // reversion round trips
inline size_t n_rat(bool full) { return full ? 4096 : 1024; }      // rational identities
inline size_t n_dual(bool full) { return full ? 65536 : 4096; }    // dual definitions
inline size_t n_runs(bool full) { return full ? 1000000 : 10000; } // run structure
inline size_t n_auto(bool full) { return full ? 1000000 : 10000; } // automata vs sequences
inline size_t n_sr(bool full) { return full ? 4096 : 1024; }       // s-layer

inline std::optional<std::string> agree_bits(std::span<const std::uint8_t> got,
                                             std::span<const std::uint8_t> want,
                                             const char* what) {
    const size_t n = std::min(got.size(), want.size());
    for (size_t i = 0; i < n; ++i)
        if (got[i] != want[i])
            return std::string(what) + ": " + cx({{"n", num(i)},
                                                  {"lhs", num(int(got[i]))},
                                                  {"rhs", num(int(want[i]))}});
    return std::nullopt;
}

// deterministic pseudo-random series for property-style checks
inline F2Series random_series(uint64_t seed, size_t n, bool zero_const) {
    F2Series s(n);
    uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (size_t i = zero_const ? 1 : 0; i < n; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        if ((state >> 62) & 1) s.set(i, 1);
    }
    return s;
}

}  // namespace detail

inline void register_series_checks(std::vector<CheckDef>& defs) {
    using namespace detail;
    auto add = [&](CheckDef def) { defs.push_back(std::move(def)); };

    // ----------------------------------------------------------------- F2 identities
    add({"eq.b_eq", "B^4 + X B^2 + B = 0 over F2", true, false, "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             const F2Series& b = c.ws.B(2, n);
             const F2RelTerm terms[] = {{&b, 4, {0}}, {&b, 2, {1}}, {&b, 1, {0}}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.c_eq", "X(C^2 + 1) + (C^4 + C) = 0 over F2", true, false, "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             const F2Series& s = c.ws.C(2, n);
             const F2Series one = F2Series::one(n);
             const F2RelTerm terms[] = {{&s, 2, {1}}, {&one, 1, {1}}, {&s, 4, {0}}, {&s, 1, {0}}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.d_eq", "X^3(D^2 + D) + D^4 = 0 over F2", true, false, "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             const F2Series& s = c.ws.D(2, n);
             const F2RelTerm terms[] = {{&s, 2, {3}}, {&s, 1, {3}}, {&s, 4, {0}}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.p_eq", "(X + 1)P + X^3 + X^2 + X = 0 over F2, P the inverse of C", true, false,
         "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             const F2Series& p = c.ws.P(2, n);
             const F2Series one = F2Series::one(n);
             const F2RelTerm terms[] = {{&p, 1, {0, 1}}, {&one, 1, {1, 2, 3}}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.q_eq", "(X + 1)Q^4 + X^3 Q = 0 over F2, Q the inverse of D", true, false,
         "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             const F2Series& q = c.ws.Q(2, n);
             const F2RelTerm terms[] = {{&q, 4, {0, 1}}, {&q, 1, {3}}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.br_eq", "B_r^(2^r) + X B_r^2 + B_r = 0 over F2, r = 2..5", true, false,
         "r=2..5, N=4096", "r=2..5, N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const F2Series& b = c.ws.B(r, n);
                 const F2RelTerm terms[] = {{&b, size_t{1} << r, {0}}, {&b, 2, {1}}, {&b, 1, {0}}};
                 const long long v = first_violation(terms, n);
                 if (v >= 0) return cx({{"r", num(r)}, {"first nonzero coefficient", num(v)}});
             }
             return std::nullopt;
         }});

    add({"eq.pr_eq", "(X^2 + 1)P_r + X^(2^r) + X = 0 over F2, r = 2..5", true, false,
         "r=2..5, N=4096", "r=2..5, N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const F2Series& p = c.ws.P(r, n);
                 const F2Series one = F2Series::one(n);
                 const F2RelTerm terms[] = {{&p, 1, {0, 2}}, {&one, 1, {1, size_t{1} << r}}};
                 const long long v = first_violation(terms, n);
                 if (v >= 0) return cx({{"r", num(r)}, {"first nonzero coefficient", num(v)}});
             }
             return std::nullopt;
         }});

    add({"eq.pr_eq.r2_consistency",
         "the r-form inverse at r = 2 satisfies the r = 2 relation (X+1)P + X^3+X^2+X", true,
         false, "N=2048", "N=16384",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             const F2Series& p2 = c.ws.P(2, n);
             // identical series feed both relation shapes; the (X^2+1) form
             // is (X+1) times this one, so both must vanish on the same input
             const F2Series one = F2Series::one(n);
             const F2RelTerm narrow[] = {{&p2, 1, {0, 1}}, {&one, 1, {1, 2, 3}}};
             const F2RelTerm wide[] = {{&p2, 1, {0, 2}}, {&one, 1, {1, 4}}};
             const long long v1 = first_violation(narrow, n);
             const long long v2 = first_violation(wide, n);
             if (v1 >= 0) return cx({{"narrow form first nonzero", num(v1)}});
             if (v2 >= 0) return cx({{"wide form first nonzero", num(v2)}});
             return std::nullopt;
         }});

    add({"eq.qr_eq", "(X + 1)Q_r^(2^r) + X^(2^r - 1) Q_r = 0 over F2, r = 2..5", true, false,
         "r=2..5, N=4096", "r=2..5, N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_ident(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const F2Series& q = c.ws.Q(r, n);
                 const F2RelTerm terms[] = {{&q, size_t{1} << r, {0, 1}},
                                            {&q, 1, {(size_t{1} << r) - 1}}};
                 const long long v = first_violation(terms, n);
                 if (v >= 0) return cx({{"r", num(r)}, {"first nonzero coefficient", num(v)}});
             }
             return std::nullopt;
         }});

    add({"fps.frobenius", "squaring spreads coefficients: S*S = S(X^2), odd coefficients vanish",
         true, false, "N=512, 8 samples", "N=4096, 8 samples",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = c.full ? 4096 : 512;
             for (uint64_t seed = 1; seed <= 8; ++seed) {
                 const F2Series a = random_series(seed, n, false);
                 if (!(series_mul(a, a) == substitute(a, 2, n)))
                     return cx({{"seed", num(seed)}});
             }
             return std::nullopt;
         }});

    add({"fps.compose_assoc", "composition is associative at truncation on zero-constant inputs",
         true, false, "N=256, 6 samples", "N=1024, 6 samples",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = c.full ? 1024 : 256;
             for (uint64_t seed = 1; seed <= 6; ++seed) {
                 const F2Series a = random_series(3 * seed, n, true);
                 const F2Series b = random_series(3 * seed + 1, n, true);
                 const F2Series g = random_series(3 * seed + 2, n, true);
                 if (!(series_compose(series_compose(a, b), g) ==
                       series_compose(a, series_compose(b, g))))
                     return cx({{"seed", num(seed)}});
             }
             return std::nullopt;
         }});

    add({"trivial.identity", "composing with X changes nothing; X is its own inverse", true,
         false, "N=64", "N=64",
         [](CheckContext) -> std::optional<std::string> {
             const size_t n = 64;
             const F2Series x = F2Series::x(n);
             if (!(series_compose(x, x) == x)) return std::string("X o X != X");
             if (!(series_reversion(x) == x)) return std::string("reversion(X) != X");
             const F2Series a = detail::random_series(7, n, false);
             if (!(series_compose(a, x) == a)) return std::string("a o X != a");
             return std::nullopt;
         }});

    // ----------------------------------------------------------------- rational identities
    add({"eq.b_complex", "B(X^4) + X B(X^2) - B(X) = 0 over the rationals", true, false,
         "N=1024", "N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             const RatSeries b = RatSeries::from_bits(c.ws.bbits(2, n));
             RatPoly one{{0, 1}}, x{{1, 1}}, minus{{0, -1}};
             const RatRelTerm terms[] = {{&b, 4, one}, {&b, 2, x}, {&b, 1, minus}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.br_complex", "B_r(X^(2^r)) + X B_r(X^2) - B_r(X) = 0 over the rationals, r = 2..5",
         true, false, "r=2..5, N=1024", "r=2..5, N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const RatSeries b = RatSeries::from_bits(c.ws.bbits(r, n));
                 RatPoly one{{0, 1}}, x{{1, 1}}, minus{{0, -1}};
                 const RatRelTerm terms[] = {{&b, size_t{1} << r, one}, {&b, 2, x}, {&b, 1, minus}};
                 const long long v = first_violation(terms, n);
                 if (v >= 0) return cx({{"r", num(r)}, {"first nonzero coefficient", num(v)}});
             }
             return std::nullopt;
         }});

    add({"eq.q_complex", "X^3 Q(X) = (1 + X) Q(X^4) over the rationals", true, false,
         "N=1024", "N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             const RatSeries q = RatSeries::from_bits(c.ws.qbits(2, n));
             RatPoly x3{{3, 1}}, neg1x{{0, -1}, {1, -1}};
             const RatRelTerm terms[] = {{&q, 1, x3}, {&q, 4, neg1x}};
             const long long v = first_violation(terms, n);
             if (v < 0) return std::nullopt;
             return cx({{"first nonzero coefficient", num(v)}});
         }});

    add({"eq.qr_complex.corrected",
         "X^(2^r - 1) Q_r(X) = (1 + X) Q_r(X^(2^r)) over the rationals, r = 2..4", true, false,
         "r=2..4, N=1024", "r=2..4, N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             for (int r = 2; r <= 4; ++r) {
                 const RatSeries q = RatSeries::from_bits(c.ws.qbits(r, n));
                 RatPoly lift{{(size_t{1} << r) - 1, 1}}, neg1x{{0, -1}, {1, -1}};
                 const RatRelTerm terms[] = {{&q, 1, lift}, {&q, size_t{1} << r, neg1x}};
                 const long long v = first_violation(terms, n);
                 if (v >= 0) return cx({{"r", num(r)}, {"first nonzero coefficient", num(v)}});
             }
             return std::nullopt;
         }});

    add({"typo.qr_complex.lowered",
         "the same functional equation with exponent 2^r - 2 (a stated variant; wrong for "
         "every r, including r = 2 where the established exponent is 3)", false, false,
         "r=2..4, N=1024", "r=2..4, N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             for (int r = 2; r <= 4; ++r) {
                 const RatSeries q = RatSeries::from_bits(c.ws.qbits(r, n));
                 RatPoly lift{{(size_t{1} << r) - 2, 1}}, neg1x{{0, -1}, {1, -1}};
                 const RatRelTerm terms[] = {{&q, 1, lift}, {&q, size_t{1} << r, neg1x}};
                 const long long v = first_violation(terms, n);
                 if (v >= 0) return cx({{"r", num(r)}, {"first nonzero coefficient", num(v)}});
             }
             return std::nullopt;
         }});

    add({"closed.pbar", "the rational lift of p equals (X^3 - X^2 + X)/(1 - X)", true, false,
         "N=1024", "N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             const RatSeries pbar = RatSeries::from_bits(c.ws.P(2, n).bits());
             const RatSeries expanded =
                 rational_series(RatPoly{{3, 1}, {2, -1}, {1, 1}}, RatPoly{{0, 1}, {1, -1}}, n);
             for (size_t i = 0; i < n; ++i)
                 if (pbar.coeff(i) != expanded.coeff(i))
                     return cx({{"n", num(i)}});
             return std::nullopt;
         }});

    add({"closed.pbar_r",
         "the rational lift of p_r equals (sum of (-1)^(k-1) X^k for k < 2^r)/(1 - X), r = 2..5",
         true, false, "r=2..5, N=1024", "r=2..5, N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_rat(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const RatSeries pbar = RatSeries::from_bits(c.ws.P(r, n).bits());
                 RatPoly numer;
                 for (size_t k = 1; k < (size_t{1} << r); ++k)
                     numer.terms.emplace_back(k, mpq_class((k % 2) ? 1 : -1));
                 const RatSeries expanded = rational_series(numer, RatPoly{{0, 1}, {1, -1}}, n);
                 for (size_t i = 0; i < n; ++i)
                     if (pbar.coeff(i) != expanded.coeff(i))
                         return cx({{"r", num(r)}, {"n", num(i)}});
             }
             return std::nullopt;
         }});

    // ----------------------------------------------------------------- reversion round trips
    auto roundtrip = [](const F2Series& u, const F2Series& v, const char* name)
        -> std::optional<std::string> {
        const F2Series x = F2Series::x(u.trunc());
        if (!(series_compose(u, v) == x))
            return std::string(name) + ": forward composition is not X";
        if (!(series_compose(v, u) == x))
            return std::string(name) + ": backward composition is not X";
        return std::nullopt;
    };

    add({"rev.c_roundtrip", "C and its inverse P compose to X both ways", true, false,
         "N=2048", "N=16384",
         [roundtrip](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             return roundtrip(c.ws.C(2, n), c.ws.P(2, n), "C/P");
         }});

    add({"rev.d_roundtrip", "D and its inverse Q compose to X both ways", true, false,
         "N=2048", "N=16384",
         [roundtrip](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             return roundtrip(c.ws.D(2, n), c.ws.Q(2, n), "D/Q");
         }});

    add({"rev.t_roundtrip", "the Thue-Morse series and its inverse compose to X both ways", true,
         false, "N=2048", "N=16384",
         [roundtrip](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             return roundtrip(c.ws.T(n), c.ws.TMInv(n), "T/c");
         }});

    add({"rev.cr_roundtrip", "C_r and P_r compose to X both ways, r = 2..5", true, false,
         "r=2..5, N=2048", "r=2..5, N=16384",
         [roundtrip](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             for (int r = 2; r <= 5; ++r)
                 if (auto bad = roundtrip(c.ws.C(r, n), c.ws.P(r, n), "C_r/P_r"))
                     return cx({{"r", num(r)}, {"detail", *bad}});
             return std::nullopt;
         }});

    add({"rev.dr_roundtrip", "D_r and Q_r compose to X both ways, r = 2..5", true, false,
         "r=2..5, N=2048", "r=2..5, N=16384",
         [roundtrip](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             for (int r = 2; r <= 5; ++r)
                 if (auto bad = roundtrip(c.ws.D(r, n), c.ws.Q(r, n), "D_r/Q_r"))
                     return cx({{"r", num(r)}, {"detail", *bad}});
             return std::nullopt;
         }});

    add({"rev.newton_vs_incremental",
         "precision-doubling reversion agrees with coefficientwise solving", true, false,
         "N=512", "N=1024",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = c.full ? 1024 : 512;
             const F2Series& d = c.ws.D(2, n);
             if (!(series_reversion(d) == reversion_incremental(d)))
                 return std::string("routes disagree for the inverse of D");
             for (uint64_t seed = 11; seed <= 13; ++seed) {
                 F2Series u = random_series(seed, n, true);
                 u.set(1, 1);
                 if (!(series_reversion(u) == reversion_incremental(u)))
                     return cx({{"seed", num(seed)}});
             }
             return std::nullopt;
         }});

    add({"fps.rational_roundtrip", "rational_series(f, g) re-multiplied by g gives back f", true,
         false, "N=256", "N=1024",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = c.full ? 1024 : 256;
             const RatPoly f{{0, 3}, {2, -7}, {5, 1}};
             const RatPoly g{{0, 2}, {1, 5}, {3, -1}};
             const RatSeries expansion = rational_series(f, g, n);
             RatSeries fs(n), gs(n);
             for (auto& [e, q] : f.terms) if (e < n) fs.set(e, q);
             for (auto& [e, q] : g.terms) if (e < n) gs.set(e, q);
             if (!(series_mul(expansion, gs) == fs))
                 return std::string("f != g * expansion");
             return std::nullopt;
         }});

    // ----------------------------------------------------------------- dual definitions
    add({"dual.b", "digit scan, recurrence and tabulated prefix agree for b", true, false,
         "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             const auto& bits = c.ws.bbits(2, n);
             for (uint64_t i = 0; i < n; ++i) {
                 const int scan = seq::baum_sweet_scan(i);
                 if (scan != seq::baum_sweet_recur(i) || scan != bits[i])
                     return cx({{"n", num(i)}});
             }
             return std::nullopt;
         }});

    add({"dual.br", "digit scan and recurrence agree for b_r, r = 2..5", true, false,
         "r=2..5, N=4096", "r=2..5, N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const auto& bits = c.ws.bbits(r, n);
                 for (uint64_t i = 0; i < n; ++i) {
                     const int scan = seq::baum_sweet_r_scan(r, i);
                     if (scan != seq::baum_sweet_r_recur(r, i) || scan != bits[i])
                         return cx({{"r", num(r)}, {"n", num(i)}});
                 }
             }
             return std::nullopt;
         }});

    add({"dual.t", "digit-sum parity and recurrence agree for Thue-Morse", true, false,
         "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             const auto t = seq::thue_morse_prefix(n);
             for (uint64_t i = 0; i < n; ++i)
                 if (seq::thue_morse_scan(i) != seq::thue_morse_recur(i) ||
                     seq::thue_morse_scan(i) != t[i])
                     return cx({{"n", num(i)}});
             return std::nullopt;
         }});

    add({"dual.m", "recurrence values equal the sorted enumeration of base-4 0/1-digit numbers",
         true, false, "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             const uint64_t limit = seq::moser_recur(n - 1) + 1;
             const auto sorted = seq::moser_r_enumerate(2, limit);
             if (sorted.size() < n) return std::string("enumeration shorter than expected");
             for (uint64_t i = 0; i < n; ++i)
                 if (seq::moser_recur(i) != sorted[i]) return cx({{"n", num(i)}});
             return std::nullopt;
         }});

    add({"dual.mr", "recurrence and enumeration agree for the base-2^r variant of m", true,
         false, "r=3..5, N=1024", "r=3,4: N=65536; r=5: N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             for (int r = 3; r <= 5; ++r) {
                 const size_t n = c.full ? (r == 5 ? 4096 : 65536) : 1024;
                 const uint64_t limit = seq::moser_r_recur(r, n - 1) + 1;
                 const auto sorted = seq::moser_r_enumerate(r, limit);
                 if (sorted.size() < n) return std::string("enumeration shorter than expected");
                 for (uint64_t i = 0; i < n; ++i)
                     if (seq::moser_r_recur(r, i) != sorted[i])
                         return cx({{"r", num(r)}, {"n", num(i)}});
             }
             return std::nullopt;
         }});

    add({"dual.q", "the q recurrence equals the inverse-series coefficients", true, false,
         "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             const F2Series& q = c.ws.Q(2, n);
             const auto& qp = c.ws.qbits(2, n);
             for (uint64_t i = 0; i < n; ++i)
                 if (seq::q_recur(i) != q.coeff(i) || qp[i] != q.coeff(i))
                     return cx({{"n", num(i)}});
             return std::nullopt;
         }});

    add({"dual.qr", "the index-shifted q_r recurrence equals the inverse-series coefficients, "
         "r = 2..5", true, false, "r=2..5, N=4096", "r=2..5, N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const F2Series& q = c.ws.Q(r, n);
                 const auto& qp = c.ws.qbits(r, n);
                 for (uint64_t i = 0; i < n; ++i)
                     if (seq::q_r_recur(r, i) != q.coeff(i) || qp[i] != q.coeff(i))
                         return cx({{"r", num(r)}, {"n", num(i)}});
             }
             return std::nullopt;
         }});

    add({"typo.qr_recur.unshifted",
         "the q_r recurrence without the index shift (q_n in place of q_{n+1}) against the "
         "inverse-series coefficients", false, false, "r=2..5, N=4096", "r=2..5, N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const F2Series& q = c.ws.Q(r, n);
                 for (uint64_t i = 0; i < n; ++i)
                     if (seq::q_r_recur_unshifted(r, i) != q.coeff(i))
                         return cx({{"r", num(r)},
                                    {"n", num(i)},
                                    {"stated", num(seq::q_r_recur_unshifted(r, i))},
                                    {"oracle", num(q.coeff(i))}});
             }
             return std::nullopt;
         }});

    add({"dual.p", "the closed form of p equals the inverse-series coefficients", true, false,
         "N=2048", "N=16384",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             const F2Series& p = c.ws.P(2, n);
             for (uint64_t i = 0; i < n; ++i)
                 if (seq::p_closed(i) != p.coeff(i)) return cx({{"n", num(i)}});
             return std::nullopt;
         }});

    add({"dual.pr", "the closed form of p_r (zero iff n even and n < 2^r) equals the "
         "inverse-series coefficients, r = 2..5", true, false,
         "r=2..5, N=2048", "r=2..5, N=16384",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_round(c.full);
             for (int r = 2; r <= 5; ++r) {
                 const F2Series& p = c.ws.P(r, n);
                 for (uint64_t i = 0; i < n; ++i)
                     if (seq::p_r_closed(r, i) != p.coeff(i))
                         return cx({{"r", num(r)}, {"n", num(i)}});
             }
             return std::nullopt;
         }});

    add({"dual.u", "the u recurrence agrees with m + 1 and with the 1-positions of q", true,
         false, "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             for (uint64_t i = 0; i < n; ++i)
                 if (seq::u_r_recur(2, i) != seq::moser_recur(i) + 1)
                     return cx({{"n", num(i)}, {"note", "u != m + 1"}});
             const auto pos = seq::char_positions(c.ws.qbits(2, n), 1);
             for (uint64_t i = 0; i < pos.size(); ++i)
                 if (seq::u_r_recur(2, i) != pos[i])
                     return cx({{"n", num(i)}, {"note", "u != position of 1 in q"}});
             return std::nullopt;
         }});

    add({"dual.ur", "the scaled u_r recurrence agrees with m_r + 1 and with the 1-positions "
         "of q_r, r = 2..5", true, false, "r=2..5, N=1024", "r=2..5, N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = c.full ? 4096 : 1024;
             for (int r = 2; r <= 5; ++r) {
                 for (uint64_t i = 0; i < n; ++i)
                     if (seq::u_r_recur(r, i) != seq::moser_r_recur(r, i) + 1)
                         return cx({{"r", num(r)}, {"n", num(i)}});
                 const auto pos = seq::char_positions(c.ws.qbits(r, n_dual(c.full)), 1);
                 for (uint64_t i = 0; i < pos.size() && i < n; ++i)
                     if (seq::u_r_recur(r, i) != pos[i])
                         return cx({{"r", num(r)}, {"n", num(i)}, {"note", "vs q_r positions"}});
             }
             return std::nullopt;
         }});

    add({"typo.unr_recur.unscaled",
         "the u_r recurrence without the 2^r factor (u_{2n} = u_n - 2^r + 1) against the "
         "m_r + 1 oracle", false, false, "r=2..5, N=1024", "r=2..5, N=4096",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = c.full ? 4096 : 1024;
             for (int r = 2; r <= 5; ++r)
                 for (uint64_t i = 0; i < n; ++i) {
                     const std::int64_t stated = seq::u_r_recur_unscaled(r, i);
                     const std::int64_t oracle =
                         static_cast<std::int64_t>(seq::moser_r_recur(r, i)) + 1;
                     if (stated != oracle)
                         return cx({{"r", num(r)}, {"n", num(i)},
                                    {"stated", num(stated)}, {"oracle", num(oracle)}});
                 }
             return std::nullopt;
         }});

    add({"dual.a", "the five-relation recurrence for a equals the 1-positions of the "
         "Thue-Morse inverse (0 prepended)", true, false, "N=4096", "N=65536",
         [](CheckContext c) -> std::optional<std::string> {
             const size_t n = n_dual(c.full);
             const auto pos = seq::char_positions(c.ws.cbits(n), 1, true);
             if (pos.size() < 4) return std::string("scan produced too few positions");
             for (uint64_t i = 0; i < pos.size(); ++i)
                 if (seq::a_recur(i) != pos[i]) return cx({{"n", num(i)}});
             return std::nullopt;
         }});

    add({"prefix.b20", "the first 20 values of b", true, false, "N=20", "N=20",
         [](CheckContext c) -> std::optional<std::string> {
             static const std::uint8_t expect[20] = {1, 1, 0, 1, 1, 0, 0, 1, 0, 1,
                                                     0, 0, 1, 0, 0, 1, 1, 0, 0, 1};
             const auto& bits = c.ws.bbits(2, 4096);
             for (uint64_t i = 0; i < 20; ++i)
                 if (bits[i] != expect[i]) return cx({{"n", num(i)}});
             return std::nullopt;
         }});
}

}  // namespace autoseq::verify

#include "verify_registry2.hpp"

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace autoseq::linrep {

using std::int64_t;
using std::size_t;
using std::uint32_t;
using std::uint64_t;

/// k-regular linear representation: value(n) = lambda * M_{d0} * ... * gamma
/// where d0 is the least significant base-k digit of n (same digit
/// convention as the automata module — a mismatched convention would still
/// produce plausible-looking representations, so tests pin it down).
struct LinRep {
    uint32_t k = 2;
    size_t dim = 0;
    std::vector<mpq_class> lambda;                          // 1 x dim
    std::vector<std::vector<std::vector<mpq_class>>> mats;  // k matrices, dim x dim
    std::vector<mpq_class> gamma;                           // dim x 1
};

inline mpq_class linrep_eval(const LinRep& rep, uint64_t n) {
    std::vector<mpq_class> row = rep.lambda;  // running row vector
    while (n) {
        const auto& m = rep.mats[static_cast<size_t>(n % rep.k)];
        std::vector<mpq_class> next(rep.dim, 0);
        for (size_t i = 0; i < rep.dim; ++i) {
            if (row[i] == 0) continue;
            for (size_t j = 0; j < rep.dim; ++j)
                if (m[i][j] != 0) next[j] += row[i] * m[i][j];
        }
        row = std::move(next);
        n /= rep.k;
    }
    mpq_class acc = 0;
    for (size_t i = 0; i < rep.dim; ++i) acc += row[i] * rep.gamma[i];
    return acc;
}

namespace detail {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    mpz_class prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

struct SubSeq {
    size_t i;
    uint64_t j;
};

inline uint64_t pow_u64(uint64_t b, size_t e) {
    uint64_t r = 1;
    for (size_t t = 0; t < e; ++t) {
        if (r > UINT64_MAX / b) throw std::overflow_error("pow_u64 overflow");
        r *= b;
    }
    return r;
}

inline size_t avail_len(size_t prefix_len, uint32_t k, const SubSeq& s) {
    const uint64_t ki = pow_u64(k, s.i);
    if (s.j >= prefix_len) return 0;
    return static_cast<size_t>((prefix_len - 1 - s.j) / ki + 1);
}

inline int64_t sub_at(std::span<const int64_t> prefix, uint32_t k, const SubSeq& s, size_t t) {
    const uint64_t ki = pow_u64(k, s.i);
    return prefix[static_cast<size_t>(ki * t + s.j)];
}

}  // namespace detail

/// Ranks of the matrices whose rows are the kernel subsequences (i, j) for
/// i <= depth, compared over the widest window every row supports.
/// Nondecreasing in depth by construction. Evidence, never proof.
inline std::vector<size_t> rank_profile(std::span<const int64_t> prefix, uint32_t k,
                                        std::span<const size_t> depths) {
    if (k < 2) throw std::invalid_argument("rank_profile: base must be >= 2");
    std::vector<size_t> out;
    for (size_t depth : depths) {
        const uint64_t kd = detail::pow_u64(k, depth);
        if (prefix.size() < 2 * kd)
            throw std::invalid_argument("rank_profile: insufficient prefix for depth");
        const size_t width = static_cast<size_t>(prefix.size() / kd);
        std::vector<std::vector<mpz_class>> m;
        uint64_t ki = 1;
        for (size_t i = 0; i <= depth; ++i) {
            for (uint64_t j = 0; j < ki; ++j) {
                std::vector<mpz_class> row(width);
                for (size_t t = 0; t < width; ++t)
                    row[t] = mpz_class(static_cast<long>(prefix[ki * t + j]));
                m.push_back(std::move(row));
            }
            ki *= k;
        }
        out.push_back(detail::bareiss_rank(std::move(m)));
    }
    return out;
}

struct GuessOutcome {
    std::optional<LinRep> rep;
    std::vector<size_t> ranks;  // rank profile over depths 0..explored, on failure
};

/// Tries to find a representation of dimension <= max_dim reproducing the
/// whole prefix: grows a basis of kernel subsequences, closing the span under
/// n -> kn + d, then solves for the digit matrices over exact rationals.
/// Any returned representation has been replayed against every prefix entry.
///
/// Data demands: every subsequence the search visits must offer at least
/// max_dim + 2 comparable terms. A sequence that closes at depth D needs
/// about (max_dim + 2) * k^(D+1) terms; a prefix too short even for the
/// first decimation level throws, while starvation deeper in the search ends
/// it with a failure outcome carrying the rank profile achieved so far.
inline GuessOutcome linrep_guess(std::span<const int64_t> prefix, uint32_t k, size_t max_dim) {
    using detail::SubSeq;
    if (k < 2) throw std::invalid_argument("linrep_guess: base must be >= 2");
    if (max_dim == 0) throw std::invalid_argument("linrep_guess: max_dim must be positive");
    const size_t min_window = max_dim + 2;

    std::vector<SubSeq> basis;
    std::vector<SubSeq> queue{{0, 0}};
    size_t deepest = 0;

    auto fail_with_ranks = [&]() {
        size_t max_depth = deepest;
        while (max_depth > 0 && prefix.size() < 2 * detail::pow_u64(k, max_depth)) --max_depth;
        std::vector<size_t> depths;
        for (size_t d = 0; d <= max_depth; ++d) depths.push_back(d);
        return GuessOutcome{std::nullopt, rank_profile(prefix, k, depths)};
    };

    for (size_t head = 0; head < queue.size(); ++head) {
        const SubSeq cand = queue[head];
        deepest = std::max(deepest, cand.i);
        size_t window = detail::avail_len(prefix.size(), k, cand);
        for (const SubSeq& b : basis)
            window = std::min(window, detail::avail_len(prefix.size(), k, b));
        if (window < min_window) {
            if (cand.i <= 1)
                throw std::invalid_argument("linrep_guess: insufficient prefix");
            return fail_with_ranks();
        }
        // dependent iff adding the candidate row keeps the rank
        std::vector<std::vector<mpz_class>> m;
        for (const SubSeq& b : basis) {
            std::vector<mpz_class> row(window);
            for (size_t t = 0; t < window; ++t)
                row[t] = mpz_class(static_cast<long>(detail::sub_at(prefix, k, b, t)));
            m.push_back(std::move(row));
        }
        std::vector<mpz_class> crow(window);
        for (size_t t = 0; t < window; ++t)
            crow[t] = mpz_class(static_cast<long>(detail::sub_at(prefix, k, cand, t)));
        m.push_back(std::move(crow));
        if (detail::bareiss_rank(std::move(m)) == basis.size()) continue;  // in span

        if (basis.size() == max_dim) return fail_with_ranks();
        basis.push_back(cand);
        const uint64_t ki = detail::pow_u64(k, cand.i);
        for (uint32_t d = 0; d < k; ++d)
            queue.push_back({cand.i + 1, cand.j + uint64_t{d} * ki});
    }

    // Solving phase. Reduce the basis matrix B to R = T * B (row-reduced,
    // T invertible). For a child vector w, the coordinates y with y R = w
    // read off at the pivot columns; then x = y T solves x B = w.
    const size_t dim = basis.size();
    size_t window = prefix.size();
    for (const SubSeq& b : basis) {
        window = std::min(window, detail::avail_len(prefix.size(), k, b));
        for (uint32_t d = 0; d < k; ++d)
            window = std::min(window, detail::avail_len(prefix.size(), k,
                              {b.i + 1, b.j + uint64_t{d} * detail::pow_u64(k, b.i)}));
    }
    if (window < min_window) return fail_with_ranks();

    std::vector<std::vector<mpq_class>> red(dim, std::vector<mpq_class>(window));
    std::vector<std::vector<mpq_class>> transform(dim, std::vector<mpq_class>(dim, 0));
    for (size_t r = 0; r < dim; ++r) {
        transform[r][r] = 1;
        for (size_t t = 0; t < window; ++t)
            red[r][t] = mpq_class(static_cast<long>(detail::sub_at(prefix, k, basis[r], t)));
    }
    std::vector<size_t> pivots;
    {
        size_t row = 0;
        for (size_t col = 0; col < window && row < dim; ++col) {
            size_t p = row;
            while (p < dim && red[p][col] == 0) ++p;
            if (p == dim) continue;
            std::swap(red[p], red[row]);
            std::swap(transform[p], transform[row]);
            const mpq_class inv = 1 / red[row][col];
            for (size_t c = col; c < window; ++c) red[row][c] *= inv;
            for (size_t c = 0; c < dim; ++c) transform[row][c] *= inv;
            for (size_t r2 = 0; r2 < dim; ++r2) {
                if (r2 == row || red[r2][col] == 0) continue;
                const mpq_class f = red[r2][col];
                for (size_t c = col; c < window; ++c) red[r2][c] -= f * red[row][c];
                for (size_t c = 0; c < dim; ++c) transform[r2][c] -= f * transform[row][c];
            }
            pivots.push_back(col);
            ++row;
        }
        if (pivots.size() != dim) return fail_with_ranks();  // degenerate window
    }

    auto express = [&](const SubSeq& child) -> std::optional<std::vector<mpq_class>> {
        std::vector<mpq_class> w(window);
        for (size_t t = 0; t < window; ++t)
            w[t] = mpq_class(static_cast<long>(detail::sub_at(prefix, k, child, t)));
        std::vector<mpq_class> y(dim);
        for (size_t r = 0; r < dim; ++r) y[r] = w[pivots[r]];
        for (size_t t = 0; t < window; ++t) {
            mpq_class acc = 0;
            for (size_t r = 0; r < dim; ++r)
                if (y[r] != 0) acc += y[r] * red[r][t];
            if (acc != w[t]) return std::nullopt;  // not in the span after all
        }
        std::vector<mpq_class> x(dim, 0);
        for (size_t c = 0; c < dim; ++c) {
            mpq_class acc = 0;
            for (size_t r = 0; r < dim; ++r)
                if (y[r] != 0) acc += y[r] * transform[r][c];
            x[c] = acc;
        }
        return x;
    };

    LinRep rep;
    rep.k = k;
    rep.dim = dim;
    rep.lambda.assign(dim, 0);
    rep.lambda[0] = 1;
    rep.gamma.resize(dim);
    for (size_t c = 0; c < dim; ++c)
        rep.gamma[c] = mpq_class(static_cast<long>(detail::sub_at(prefix, k, basis[c], 0)));
    rep.mats.assign(k, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim, 0)));
    for (size_t b = 0; b < dim; ++b) {
        const uint64_t ki = detail::pow_u64(k, basis[b].i);
        for (uint32_t d = 0; d < k; ++d) {
            auto x = express({basis[b].i + 1, basis[b].j + uint64_t{d} * ki});
            if (!x) return fail_with_ranks();
            rep.mats[d][b] = std::move(*x);
        }
    }

    // the guess must reproduce the entire given prefix, exactly
    for (size_t n = 0; n < prefix.size(); ++n)
        if (linrep_eval(rep, n) != mpq_class(static_cast<long>(prefix[n])))
            return fail_with_ranks();
    return GuessOutcome{std::move(rep), {}};
}

inline nlohmann::json linrep_to_json(const LinRep& rep) {
    nlohmann::json lambda = nlohmann::json::array(), gamma = nlohmann::json::array();
    for (const auto& q : rep.lambda) lambda.push_back(q.get_str());
    for (const auto& q : rep.gamma) gamma.push_back(q.get_str());
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : rep.mats) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : m) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& q : r) row.push_back(q.get_str());
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    return {{"k", rep.k}, {"dim", rep.dim}, {"lambda", lambda}, {"mats", mats}, {"gamma", gamma}};
}

}  // namespace autoseq::linrep

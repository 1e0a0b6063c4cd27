#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace autoseq::automata {

using std::size_t;
using std::uint32_t;
using std::uint64_t;

/// Digit convention used everywhere in this library: base-k digits are fed
/// least significant first, canonical expansion only (n = 0 reads the empty
/// string). Reading most-significant-first is not an equivalent choice; the
/// fixtures below disagree with their sequences under it (there is a test
/// pinning that down).
struct DigitConvention {
    static std::vector<uint32_t> digits(uint64_t n, uint32_t base) {
        if (base < 2) throw std::invalid_argument("digits: base must be >= 2");
        std::vector<uint32_t> d;
        while (n) {
            d.push_back(static_cast<uint32_t>(n % base));
            n /= base;
        }
        return d;
    }
};

/// Deterministic finite automaton with output. Total transition map,
/// immutable after construction; evaluation is pure.
struct Dfao {
    uint32_t base = 2;
    uint32_t init = 0;
    std::vector<int> out;                         // per state
    std::vector<std::vector<uint32_t>> delta;     // [state][digit]

    size_t states() const { return out.size(); }

    void validate() const {
        if (base < 2) throw std::invalid_argument("Dfao: base must be >= 2");
        if (init >= states()) throw std::invalid_argument("Dfao: bad initial state");
        if (delta.size() != states()) throw std::invalid_argument("Dfao: delta size mismatch");
        for (const auto& row : delta) {
            if (row.size() != base) throw std::invalid_argument("Dfao: delta not total");
            for (uint32_t t : row)
                if (t >= states()) throw std::invalid_argument("Dfao: dangling transition");
        }
    }

    int eval(uint64_t n) const {
        uint32_t s = init;
        while (n) {
            s = delta[s][static_cast<uint32_t>(n % base)];
            n /= base;
        }
        return out[s];
    }

    friend bool operator==(const Dfao&, const Dfao&) = default;
};

inline int dfao_eval(const Dfao& a, uint64_t n) { return a.eval(n); }

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

/// 3-state base-2 machine for the Baum-Sweet sequence.
inline Dfao fig1() {
    Dfao a;
    a.base = 2;
    a.init = 0;
    a.out = {1, 1, 0};
    a.delta = {{1, 0}, {0, 2}, {2, 2}};
    return a;
}

/// 5-state base-2 machine for the q sequence.
inline Dfao fig2() {
    Dfao a;
    a.base = 2;
    a.init = 0;
    a.out = {0, 0, 1, 0, 1};
    a.delta = {{1, 2}, {3, 4}, {4, 3}, {3, 3}, {2, 2}};
    return a;
}

/// 3-state base-2^r machine for the q r-variant; digits {1,2} from the start
/// state accept, later digits must stay in {0,1}.
inline Dfao fig4(int r) {
    if (r < 2) throw std::invalid_argument("fig4: r must be >= 2");
    if (r > 16) throw std::invalid_argument("fig4: alphabet too large");
    const uint32_t k = uint32_t{1} << r;
    Dfao a;
    a.base = k;
    a.init = 0;
    a.out = {0, 0, 1};
    a.delta.assign(3, std::vector<uint32_t>(k));
    for (uint32_t d = 0; d < k; ++d) {
        a.delta[0][d] = (d == 1 || d == 2) ? 2 : 1;
        a.delta[1][d] = 1;
        a.delta[2][d] = (d <= 1) ? 2 : 1;
    }
    return a;
}

/// 3-state base-4 machine for the q sequence; fig4 at r = 2.
inline Dfao fig3() { return fig4(2); }

/// (r+1)-state machine for the Baum-Sweet r-variant: states count the
/// running block of zeros mod r, plus a dead state.
inline Dfao baum_sweet_automaton(int r) {
    if (r < 2) throw std::invalid_argument("baum_sweet_automaton: r must be >= 2");
    Dfao a;
    a.base = 2;
    a.init = 0;
    const uint32_t dead = static_cast<uint32_t>(r);
    a.out.assign(r + 1, 1);
    a.out[dead] = 0;
    a.delta.assign(r + 1, std::vector<uint32_t>(2));
    for (uint32_t s = 0; s < dead; ++s) {
        a.delta[s][0] = (s + 1) % static_cast<uint32_t>(r);
        a.delta[s][1] = (s == 0) ? 0 : dead;
    }
    a.delta[dead] = {dead, dead};
    return a;
}

/// Lookup by name: fig1 | fig2 | fig3 | fig4:<r> | baum_sweet | baum_sweet:<r>.
inline Dfao fixture(std::string_view name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "fig3") return fig3();
    if (name == "baum_sweet") return baum_sweet_automaton(2);
    for (std::string_view prefix : {std::string_view("fig4:"), std::string_view("baum_sweet:")}) {
        if (name.substr(0, prefix.size()) == prefix) {
            int r = 0;
            try {
                const std::string rs(name.substr(prefix.size()));
                size_t used = 0;
                r = std::stoi(rs, &used);
                if (used != rs.size()) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("bad automaton parameter in '" + std::string(name) + "'");
            }
            return prefix[0] == 'f' ? fig4(r) : baum_sweet_automaton(r);
        }
    }
    throw std::invalid_argument("unknown automaton: '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// minimize / rebase / export
// ---------------------------------------------------------------------------

/// Output-equivalent automaton with the fewest reachable states. States of
/// the result are numbered in breadth-first order from the initial state, so
/// the result is canonical for its behavior.
inline Dfao dfao_minimize(const Dfao& a) {
    a.validate();
    // reachable restriction
    std::vector<uint32_t> order;
    std::vector<int> idx(a.states(), -1);
    order.push_back(a.init);
    idx[a.init] = 0;
    for (size_t h = 0; h < order.size(); ++h)
        for (uint32_t d = 0; d < a.base; ++d) {
            const uint32_t t = a.delta[order[h]][d];
            if (idx[t] < 0) {
                idx[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }

    // Moore refinement on the reachable part
    const size_t n = order.size();
    std::vector<int> cls(n);
    {
        std::map<int, int> by_out;
        for (size_t i = 0; i < n; ++i) {
            auto [it, fresh] = by_out.try_emplace(a.out[order[i]], static_cast<int>(by_out.size()));
            cls[i] = it->second;
        }
    }
    for (;;) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<int> key;
            key.reserve(a.base + 1);
            key.push_back(cls[i]);
            for (uint32_t d = 0; d < a.base; ++d)
                key.push_back(cls[idx[a.delta[order[i]][d]]]);
            auto [it, fresh] = sig.try_emplace(std::move(key), static_cast<int>(sig.size()));
            next[i] = it->second;
        }
        if (next == cls) break;
        cls = std::move(next);
    }

    // rebuild, numbering classes in BFS order from the initial class
    const int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> rep(nclasses, -1);
    for (size_t i = 0; i < n; ++i)
        if (rep[cls[i]] < 0) rep[cls[i]] = static_cast<int>(i);

    std::vector<int> renum(nclasses, -1);
    std::vector<int> bfs;
    renum[cls[0]] = 0;
    bfs.push_back(cls[0]);
    for (size_t h = 0; h < bfs.size(); ++h) {
        const int c = bfs[h];
        for (uint32_t d = 0; d < a.base; ++d) {
            const int t = cls[idx[a.delta[order[rep[c]]][d]]];
            if (renum[t] < 0) {
                renum[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }

    Dfao m;
    m.base = a.base;
    m.init = 0;
    m.out.assign(bfs.size(), 0);
    m.delta.assign(bfs.size(), std::vector<uint32_t>(a.base));
    for (size_t h = 0; h < bfs.size(); ++h) {
        const int c = bfs[h];
        const uint32_t src = order[rep[c]];
        m.out[h] = a.out[src];
        for (uint32_t d = 0; d < a.base; ++d)
            m.delta[h][d] = static_cast<uint32_t>(renum[cls[idx[a.delta[src][d]]]]);
    }
    return m;
}

/// Base-k^power automaton computing the same function: each new digit d is
/// expanded to `power` base-k digits, least significant first.
inline Dfao dfao_rebase(const Dfao& a, uint32_t power) {
    a.validate();
    if (power < 1) throw std::invalid_argument("dfao_rebase: power must be >= 1");
    uint64_t nb = 1;
    for (uint32_t i = 0; i < power; ++i) {
        nb *= a.base;
        if (nb > (uint64_t{1} << 20))
            throw std::invalid_argument("dfao_rebase: digit alphabet too large");
    }
    Dfao b;
    b.base = static_cast<uint32_t>(nb);
    b.init = a.init;
    b.out = a.out;
    b.delta.assign(a.states(), std::vector<uint32_t>(b.base));
    for (size_t s = 0; s < a.states(); ++s)
        for (uint32_t d = 0; d < b.base; ++d) {
            uint32_t cur = static_cast<uint32_t>(s);
            uint32_t rest = d;
            for (uint32_t i = 0; i < power; ++i) {
                cur = a.delta[cur][rest % a.base];
                rest /= a.base;
            }
            b.delta[s][d] = cur;
        }
    return b;
}

/// GraphViz rendering; the initial state gets a bold outline, edges carry
/// comma-joined digit labels, nodes show their output.
inline std::string dfao_to_dot(const Dfao& a) {
    a.validate();
    std::ostringstream os;
    os << "digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (size_t s = 0; s < a.states(); ++s) {
        os << "  s" << s << " [label=\"" << a.out[s] << "\"";
        if (s == a.init) os << ", penwidth=2";
        os << "];\n";
    }
    for (size_t s = 0; s < a.states(); ++s) {
        std::map<uint32_t, std::vector<uint32_t>> grouped;  // target -> digits
        for (uint32_t d = 0; d < a.base; ++d) grouped[a.delta[s][d]].push_back(d);
        for (const auto& [t, digits] : grouped) {
            os << "  s" << s << " -> s" << t << " [label=\"";
            for (size_t i = 0; i < digits.size(); ++i)
                os << (i ? "," : "") << digits[i];
            os << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

inline nlohmann::json dfao_to_json(const Dfao& a) {
    a.validate();
    nlohmann::json states = nlohmann::json::array();
    for (size_t s = 0; s < a.states(); ++s)
        states.push_back({{"id", s}, {"out", a.out[s]}});
    nlohmann::json edges = nlohmann::json::array();
    for (size_t s = 0; s < a.states(); ++s)
        for (uint32_t d = 0; d < a.base; ++d)
            edges.push_back({{"from", s}, {"digit", d}, {"to", a.delta[s][d]}});
    return {{"base", a.base}, {"states", states}, {"init", a.init}, {"edges", edges}};
}

}  // namespace autoseq::automata

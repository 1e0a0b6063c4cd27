#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "automata.hpp"

namespace autoseq::kernel {

using std::size_t;
using std::uint64_t;

/// One subsequence (a_{k^i n + j}) with j < k^i, tagged with the class it
/// fell into. Classes are numbered in order of first appearance when pairs
/// are enumerated by (i, j); the first element of each class is its
/// lexicographically least representative.
struct KernelElement {
    size_t i;
    uint64_t j;
    size_t cls;
};

struct KernelReport {
    std::vector<KernelElement> elements;
    size_t classes = 0;
    bool heuristic = false;
};

/// Exact kernel of the function computed by a DFAO. Under least-significant-
/// first reading, the subsequence for (i, j) is generated by the minimized
/// automaton started at the state reached by the i digits of j, so the
/// classes are exactly the reachable states of the minimized automaton.
/// Elements lists one representative (i, j) per class.
inline KernelReport kernel_exact(const automata::Dfao& a) {
    const automata::Dfao m = automata::dfao_minimize(a);
    KernelReport rep;
    std::vector<bool> seen(m.states(), false);
    seen[m.init] = true;
    rep.elements.push_back({0, 0, rep.classes++});
    // enumerate digit strings level by level; once a whole level adds no new
    // state, none can appear later
    for (size_t i = 1; i <= m.states(); ++i) {
        bool fresh = false;
        uint64_t limit = 1;
        for (size_t t = 0; t < i; ++t) limit *= m.base;
        for (uint64_t j = 0; j < limit; ++j) {
            uint32_t s = m.init;
            uint64_t rest = j;
            for (size_t t = 0; t < i; ++t) {
                s = m.delta[s][static_cast<uint32_t>(rest % m.base)];
                rest /= m.base;
            }
            if (!seen[s]) {
                seen[s] = true;
                rep.elements.push_back({i, j, rep.classes++});
                fresh = true;
            }
        }
        if (!fresh) break;
    }
    return rep;
}

/// Prefix-equality kernel estimate: pairs (i, j) with i <= depth fall into
/// the same class when their subsequences agree on the first `bound` terms.
/// Prefix equality is not equality, hence the heuristic flag.
inline KernelReport kernel_empirical(std::span<const std::int64_t> prefix, uint32_t k,
                                     size_t depth, size_t bound) {
    if (k < 2) throw std::invalid_argument("kernel_empirical: base must be >= 2");
    uint64_t kd = 1;
    for (size_t i = 0; i < depth; ++i) kd *= k;
    if (bound == 0 || prefix.size() < kd * bound)
        throw std::invalid_argument("kernel_empirical: insufficient prefix for depth/bound");

    KernelReport rep;
    rep.heuristic = true;
    std::map<std::vector<std::int64_t>, size_t> classes;
    uint64_t ki = 1;
    for (size_t i = 0; i <= depth; ++i) {
        for (uint64_t j = 0; j < ki; ++j) {
            std::vector<std::int64_t> key(bound);
            for (size_t t = 0; t < bound; ++t) key[t] = prefix[ki * t + j];
            auto [it, fresh] = classes.try_emplace(std::move(key), classes.size());
            rep.elements.push_back({i, j, it->second});
        }
        ki *= k;
    }
    rep.classes = classes.size();
    return rep;
}

inline nlohmann::json kernel_to_json(const KernelReport& rep) {
    nlohmann::json els = nlohmann::json::array();
    for (const auto& e : rep.elements)
        els.push_back({{"i", e.i}, {"j", e.j}, {"class", e.cls}});
    return {{"elements", els}, {"classes", rep.classes}, {"heuristic", rep.heuristic}};
}

}  // namespace autoseq::kernel

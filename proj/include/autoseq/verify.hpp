#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "automata.hpp"
#include "f2series.hpp"
#include "kernel.hpp"
#include "linrep.hpp"
#include "ratseries.hpp"
#include "relation.hpp"
#include "seq.hpp"
#include "words.hpp"

namespace autoseq::verify {

using std::size_t;
using std::uint64_t;

/// Shared artifacts for a verification run. Heavyweight series and prefixes
/// are computed once per (kind, parameter, length) and memoized; values are
/// immutable once stored, so concurrent checks may read them freely.
class Workspace {
public:
    /// Baum-Sweet r-variant as an F2 series (r = 2 is the classic sequence).
    const F2Series& B(int r, size_t n) {
        return memo(f2_, key("B", r, n), [&] {
            return F2Series::from_bits(seq::baum_sweet_r_prefix(r, n));
        });
    }

    /// B with the constant term flipped to zero.
    const F2Series& C(int r, size_t n) {
        return memo(f2_, key("C", r, n), [&] {
            F2Series c = B(r, n);
            if (n > 0) c.set(0, 0);
            return c;
        });
    }

    /// X * B: the shift-patched variant.
    const F2Series& D(int r, size_t n) {
        return memo(f2_, key("D", r, n), [&] { return shift_up(B(r, n), 1); });
    }

    const F2Series& T(size_t n) {
        return memo(f2_, key("T", 0, n), [&] {
            return F2Series::from_bits(seq::thue_morse_prefix(n));
        });
    }

    /// Compositional inverse of C (the p coefficients).
    const F2Series& P(int r, size_t n) {
        return memo(f2_, key("P", r, n), [&] { return series_reversion(C(r, n)); });
    }

    /// Compositional inverse of D (the q coefficients).
    const F2Series& Q(int r, size_t n) {
        return memo(f2_, key("Q", r, n), [&] { return series_reversion(D(r, n)); });
    }

    /// Compositional inverse of the Thue-Morse series (the c coefficients).
    const F2Series& TMInv(size_t n) {
        return memo(f2_, key("c", 0, n), [&] { return series_reversion(T(n)); });
    }

    const std::vector<std::uint8_t>& bbits(int r, size_t n) {
        return memo(bits_, key("b", r, n), [&] { return seq::baum_sweet_r_prefix(r, n); });
    }

    const std::vector<std::uint8_t>& qbits(int r, size_t n) {
        return memo(bits_, key("q", r, n), [&] { return seq::q_r_prefix(r, n); });
    }

    const std::vector<std::uint8_t>& cbits(size_t n) {
        return memo(bits_, key("cb", 0, n), [&] { return TMInv(n).bits(); });
    }

    const std::vector<std::int64_t>& prefix(seq::SeqId id, size_t n) {
        return memo(ints_, seq::to_string(id) + "@" + std::to_string(n),
                    [&] { return seq::generate(id, n).values; });
    }

private:
    static std::string key(const char* kind, int r, size_t n) {
        return std::string(kind) + ":" + std::to_string(r) + "@" + std::to_string(n);
    }

    template <class T, class F>
    const T& memo(std::map<std::string, T>& store, const std::string& k, F&& make) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = store.find(k);
            if (it != store.end()) return it->second;
        }
        T val = make();  // computed outside the lock; losers discard their copy
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = store.try_emplace(k, std::move(val));
        return it->second;
    }

    std::mutex mu_;
    std::map<std::string, F2Series> f2_;
    std::map<std::string, std::vector<std::uint8_t>> bits_;
    std::map<std::string, std::vector<std::int64_t>> ints_;
};

enum class Status { pass, fail, flagged };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "flagged";
    }
}

struct CheckResult {
    std::string id;
    std::string description;
    std::string bounds;
    Status status = Status::fail;
    bool expected_pass = true;
    std::optional<std::string> counterexample;
    double millis = 0.0;

    /// A result meets expectations when an expected-pass check passes (or is
    /// flagged as heuristic) and an expected-fail check indeed fails.
    bool ok() const {
        return expected_pass ? status != Status::fail : status == Status::fail;
    }
};

struct CheckContext {
    Workspace& ws;
    bool full;
};

/// A registered claim: run() returns nullopt when the claim holds at the
/// profile bounds, otherwise the smallest counterexample it found.
struct CheckDef {
    std::string id;
    std::string description;
    bool expect_pass = true;
    bool heuristic = false;  // passing result is reported as "flagged"
    std::string bounds_quick;
    std::string bounds_full;
    std::function<std::optional<std::string>(CheckContext)> run;
};

namespace detail {

inline std::string cx(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (auto& [k, v] : kv) {
        if (!out.empty()) out += ", ";
        out += std::string(k) + "=" + v;
    }
    return out;
}

inline std::string num(uint64_t v) { return std::to_string(v); }
inline std::string num(std::int64_t v) { return std::to_string(v); }
inline std::string num(int v) { return std::to_string(v); }

/// Longest run of `value` over the prefix, ignoring a run still open at the
/// end (its true length is unknown).
inline size_t max_closed_run(std::span<const std::uint8_t> bits, int value) {
    size_t best = 0, cur = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == value) {
            ++cur;
        } else {
            best = std::max(best, cur);
            cur = 0;
        }
    }
    return best;
}

struct Run {
    size_t start;
    size_t len;   // closed runs only
};

inline std::vector<Run> closed_runs(std::span<const std::uint8_t> bits, int value) {
    std::vector<Run> out;
    size_t i = 0;
    while (i < bits.size()) {
        if (bits[i] != value) { ++i; continue; }
        size_t j = i;
        while (j < bits.size() && bits[j] == value) ++j;
        if (j < bits.size()) out.push_back({i, j - i});
        i = j;
    }
    return out;
}

}  // namespace detail

const std::vector<CheckDef>& registry();

inline CheckResult run_one(const CheckDef& def, Workspace& ws, bool full) {
    CheckResult res;
    res.id = def.id;
    res.description = def.description;
    res.bounds = full ? def.bounds_full : def.bounds_quick;
    res.expected_pass = def.expect_pass;
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<std::string> violation;
    try {
        violation = def.run(CheckContext{ws, full});
    } catch (const std::exception& e) {
        violation = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (violation) {
        res.status = Status::fail;
        res.counterexample = std::move(violation);
    } else {
        res.status = def.heuristic ? Status::flagged : Status::pass;
    }
    return res;
}

struct Report {
    std::string profile;
    std::vector<CheckResult> checks;

    size_t unexpected() const {
        size_t n = 0;
        for (const auto& c : checks) n += !c.ok();
        return n;
    }
};

inline bool expectations_met(const Report& r) { return r.unexpected() == 0; }

inline CheckResult run_check(std::string_view id, Workspace& ws, bool full) {
    for (const CheckDef& def : registry())
        if (def.id == id) return run_one(def, ws, full);
    throw std::invalid_argument("unknown check id: '" + std::string(id) + "'");
}

inline Report run_all(bool full, int jobs = 1) {
    Report rep;
    rep.profile = full ? "full" : "quick";
    const auto& defs = registry();
    rep.checks.resize(defs.size());
    Workspace ws;
    if (jobs <= 1) {
        for (size_t i = 0; i < defs.size(); ++i) rep.checks[i] = run_one(defs[i], ws, full);
        return rep;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= defs.size()) return;
            rep.checks[i] = run_one(defs[i], ws, full);
        }
    };
    std::vector<std::future<void>> pool;
    for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return rep;
}

inline nlohmann::json report_json(const Report& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json j = {
            {"id", c.id},
            {"status", to_string(c.status)},
            {"expected", c.expected_pass ? "pass" : "fail"},
            {"bounds", c.bounds},
            {"millis", c.millis},
        };
        if (c.counterexample) j["counterexample"] = *c.counterexample;
        checks.push_back(std::move(j));
    }
    size_t passed = 0, failed = 0, flagged = 0;
    for (const auto& c : rep.checks) {
        if (c.status == Status::pass) ++passed;
        else if (c.status == Status::fail) ++failed;
        else ++flagged;
    }
    return {{"profile", rep.profile},
            {"checks", checks},
            {"summary",
             {{"total", rep.checks.size()},
              {"pass", passed},
              {"fail", failed},
              {"flagged", flagged},
              {"unexpected", rep.unexpected()}}}};
}

/// Fixed-width table; timings are deliberately left out so the text output
/// is byte-stable across runs (they live in the JSON report).
inline std::string report_table(const Report& rep) {
    std::ostringstream os;
    os << "profile: " << rep.profile << "\n";
    size_t idw = 2;
    for (const auto& c : rep.checks) idw = std::max(idw, c.id.size());
    for (const auto& c : rep.checks) {
        os << (c.ok() ? "  " : "! ");
        os << c.id << std::string(idw - c.id.size() + 2, ' ');
        os << to_string(c.status);
        if (c.status == Status::fail) os << " (expected " << (c.expected_pass ? "pass" : "fail") << ")";
        os << "  [" << c.bounds << "]";
        if (c.counterexample) os << "  " << *c.counterexample;
        os << "\n";
    }
    os << "unexpected: " << rep.unexpected() << " of " << rep.checks.size() << "\n";
    return os.str();
}

}  // namespace autoseq::verify

#include "verify_registry.hpp"

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cohere {

struct Counterexample {
    std::string instance;
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one law over an enumerated instance set.
struct AuditReport {
    std::string law;
    std::uint64_t instances = 0;
    bool sampled = false;
    std::uint64_t failure_count = 0;
    std::vector<Counterexample> failures;  // first `max_failures` in enumeration order

    bool passed() const { return failure_count == 0; }
};

struct AuditOptions {
    std::uint64_t seed = 0;
    /// Instance spaces larger than this are sampled with `seed`.
    std::uint64_t max_instances = 1000000;
    /// Counterexamples retained per law; the count is always exact.
    std::size_t max_failures = 64;
};

/**
 * \brief Checks `check(i)` for every instance index i in [0, total).
 *
 * `check` returns a counterexample when the instance fails. When total exceeds
 * the instance cap, a seeded uniform sample of that size is checked instead
 * (sorted, so reports stay ordered).
 */
inline AuditReport run_law(std::string law, std::uint64_t total,
                           const std::function<std::optional<Counterexample>(std::uint64_t)>& check,
                           const AuditOptions& opt = {}) {
    AuditReport rep;
    rep.law = std::move(law);
    auto visit = [&](std::uint64_t i) {
        ++rep.instances;
        if (auto cx = check(i)) {
            ++rep.failure_count;
            if (rep.failures.size() < opt.max_failures) rep.failures.push_back(std::move(*cx));
        }
    };
    if (total <= opt.max_instances) {
        for (std::uint64_t i = 0; i < total; ++i) visit(i);
        return rep;
    }
    rep.sampled = true;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::vector<std::uint64_t> idx(opt.max_instances);
    for (auto& i : idx) i = pick(rng);
    std::sort(idx.begin(), idx.end());
    for (auto i : idx) visit(i);
    return rep;
}

/// Mixed-radix decoding of an instance index; digit 0 varies slowest.
inline std::vector<std::size_t> decode_index(std::uint64_t i, const std::vector<std::size_t>& radix) {
    std::vector<std::size_t> d(radix.size());
    for (std::size_t k = radix.size(); k-- > 0;) {
        d[k] = static_cast<std::size_t>(i % radix[k]);
        i /= radix[k];
    }
    return d;
}

inline std::uint64_t index_space(const std::vector<std::size_t>& radix) {
    std::uint64_t t = 1;
    for (auto r : radix) t *= r;
    return t;
}

inline bool all_passed(const std::vector<AuditReport>& reps) {
    for (const auto& r : reps)
        if (!r.passed()) return false;
    return true;
}

inline const AuditReport* find_law(const std::vector<AuditReport>& reps, const std::string& law) {
    for (const auto& r : reps)
        if (r.law == law) return &r;
    return nullptr;
}

}  // namespace cohere

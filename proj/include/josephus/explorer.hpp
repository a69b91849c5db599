#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <exception>
#include <numeric>
#include <optional>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "josephus/checked.hpp"
#include "josephus/closed_form.hpp"
#include "josephus/errors.hpp"
#include "josephus/game.hpp"
#include "josephus/types.hpp"

namespace josephus::explore {

enum class Subject {
    Theorem1,
    Theorem2,
    Theorem3PaperPrinted,
    Theorem3Reconciled,
    Lemma1,
    Lemma2,
    OneLifeSetPaperPrinted,
    OneLifeSetReconciled,
    ConstantSurvivor,
    KGreaterThanN,
    NonCoprimeSurvey,
};

inline constexpr std::array<std::pair<Subject, std::string_view>, 11> kSubjectNames{{
    {Subject::Theorem1, "Theorem1"},
    {Subject::Theorem2, "Theorem2"},
    {Subject::Theorem3PaperPrinted, "Theorem3PaperPrinted"},
    {Subject::Theorem3Reconciled, "Theorem3Reconciled"},
    {Subject::Lemma1, "Lemma1"},
    {Subject::Lemma2, "Lemma2"},
    {Subject::OneLifeSetPaperPrinted, "OneLifeSetPaperPrinted"},
    {Subject::OneLifeSetReconciled, "OneLifeSetReconciled"},
    {Subject::ConstantSurvivor, "ConstantSurvivor"},
    {Subject::KGreaterThanN, "KGreaterThanN"},
    {Subject::NonCoprimeSurvey, "NonCoprimeSurvey"},
}};

inline std::string_view to_string(Subject s) {
    for (const auto& [subject, name] : kSubjectNames)
        if (subject == s) return name;
    return "?";
}

inline std::optional<Subject> parse_subject(std::string_view name) {
    for (const auto& [subject, known] : kSubjectNames)
        if (known == name) return subject;
    return std::nullopt;
}

/// Inclusive bounds for a sweep.
struct SweepRange {
    Count k_min = 1, k_max = 1;
    Count n_min = 1, n_max = 1;
    Count lives_min = 1, lives_max = 1;
    bool coprime_only = false;

    friend bool operator==(const SweepRange&, const SweepRange&) = default;
};

inline void validate(const SweepRange& r) {
    if (r.k_min == 0 || r.n_min == 0 || r.lives_min == 0) throw DomainError("sweep bounds must be >= 1");
    if (r.k_min > r.k_max || r.n_min > r.n_max || r.lives_min > r.lives_max) {
        throw DomainError("sweep bound min exceeds max");
    }
}

/// One enumerated item. `soldier` is set only for per-soldier subjects.
struct Case {
    Count k = 0;
    Count n = 0;
    Count lives = 0;
    std::optional<Label> soldier;

    friend auto operator<=>(const Case&, const Case&) = default;
    friend bool operator==(const Case&, const Case&) = default;
};

/// A compared quantity: absent (monostate), a scalar, or a label set.
using Value = std::variant<std::monostate, Count, std::vector<Label>>;

struct Mismatch {
    Case config;
    Value expected;
    Value oracle;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
    Subject subject = Subject::Theorem1;
    SweepRange range;
    Count checked = 0;
    std::vector<Mismatch> mismatches;
    bool complete = true;
};

struct SweepOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    Count slot_cap = 1'000'000'000;
    RingKind ring = RingKind::DoublyLinked;
};

namespace detail {

inline unsigned thread_count(unsigned requested, std::size_t work) {
    unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

/// Evaluates f(i) for i in [0, count) over static contiguous partitions.
/// Results land at their index, so output order never depends on scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned threads, F f) {
    std::vector<R> out(count);
    const unsigned workers = thread_count(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(count, lo + chunk);
                try {
                    for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

inline bool coprime(Count n, Count k) { return std::gcd(n, k + 1) == 1; }

inline std::vector<Label> sorted(std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct Planned {
    Case c;
    Count cost = 0;
};

inline Count game_cost(Count n, Count k, Count lives) { return slot_bound({n, k, lives}); }

/// Admissible cases of a subject, sorted by (k, n, lives).
inline std::vector<Planned> plan(Subject s, const SweepRange& r) {
    std::vector<Planned> out;
    for (Count k = r.k_min; k <= r.k_max; ++k) {
        for (Count n = r.n_min; n <= r.n_max; ++n) {
            const bool cop = coprime(n, k);
            if (r.coprime_only && !cop) continue;
            auto add = [&](Count lives, Count cost) { out.push_back({{k, n, lives, std::nullopt}, cost}); };
            switch (s) {
                case Subject::Theorem1:
                case Subject::Theorem2:
                    add(1, game_cost(n, k, 1));
                    break;
                case Subject::Theorem3PaperPrinted:
                case Subject::Theorem3Reconciled:
                    if (cop && n > k) add(k, game_cost(n, k, k));
                    break;
                case Subject::KGreaterThanN:
                    if (cop && k > n) add(k, game_cost(n, k, k));
                    break;
                case Subject::Lemma1:
                    if (n < k) break;
                    for (Count l = r.lives_min; l <= r.lives_max; ++l)
                        add(l, game_cost(n, k, l) + game_cost(checked::mul(k + 1, n), k, l));
                    break;
                case Subject::Lemma2:
                    if (!cop) break;
                    for (Count l = std::max(r.lives_min, k + 1); l <= r.lives_max; ++l)
                        add(l, game_cost(n, k, l) + game_cost(n, k, (l - 1) % k + 1));
                    break;
                case Subject::OneLifeSetPaperPrinted:
                    if (!cop) break;
                    for (Count l = r.lives_min; l <= std::min(r.lives_max, k - 1); ++l)
                        add(l, game_cost(n, k, l));
                    break;
                case Subject::OneLifeSetReconciled:
                    if (!cop) break;
                    for (Count l = r.lives_min; l <= std::min(r.lives_max, k); ++l)
                        add(l, 2 * game_cost(n, k, l));
                    break;
                case Subject::ConstantSurvivor:
                    if (n <= k) break;
                    for (Count l = r.lives_min; l <= r.lives_max; ++l)
                        add(l, game_cost(n, k, l) + game_cost(n, k, r.lives_min));
                    break;
                case Subject::NonCoprimeSurvey:
                    if (cop || n % (k + 1) != 0 || n / (k + 1) < k) break;
                    for (Count l = r.lives_min; l <= r.lives_max; ++l)
                        add(l, game_cost(n, k, l) + game_cost(n / (k + 1), k, l));
                    break;
            }
        }
    }
    return out;
}

struct Outcome {
    Count checked = 0;
    std::vector<Mismatch> mismatches;
};

inline Value as_value(const std::optional<OneLifeSnapshot>& snap) {
    if (!snap) return std::monostate{};
    return sorted(snap->alive);
}

inline Outcome evaluate(Subject s, const Case& c, const SweepRange& r, RingKind ring) {
    Outcome out;
    auto sim = [&](Count n, Count lives) { return survivor_of({n, c.k, lives}, ring); };
    auto compare = [&](Case at, Value expected, Value oracle) {
        ++out.checked;
        if (expected != oracle) out.mismatches.push_back({std::move(at), std::move(expected), std::move(oracle)});
    };
    switch (s) {
        case Subject::Theorem1:
            compare(c, survivor_t1(c.n, c.k), sim(c.n, 1));
            break;
        case Subject::Theorem2: {
            const auto game = run({c.n, c.k, 1}, RunMode::Depletion, ring);
            std::vector<Count> when(c.n, 0);
            for (const auto& e : game.order) when[e.soldier] = e.ordinal;
            for (Label x = 0; x < c.n; ++x) {
                Case at = c;
                at.soldier = x;
                compare(at, elim_time_t2(c.n, c.k, x), when[x]);
            }
            break;
        }
        case Subject::Theorem3PaperPrinted:
            compare(c, survivor_t3(c.n, c.k, FormulaMode::PaperPrinted), sim(c.n, c.k));
            break;
        case Subject::Theorem3Reconciled:
            compare(c, survivor_t3(c.n, c.k, FormulaMode::Reconciled), sim(c.n, c.k));
            break;
        case Subject::KGreaterThanN:
            compare(c, c.n - 1, sim(c.n, c.k));
            break;
        case Subject::Lemma1:
            compare(c, scale_lemma1(c.n, c.k, c.lives, sim(c.n, c.lives)),
                    sim(checked::mul(c.k + 1, c.n), c.lives));
            break;
        case Subject::Lemma2:
            compare(c, sim(c.n, reduce_lives_lemma2(c.n, c.k, c.lives)), sim(c.n, c.lives));
            break;
        case Subject::OneLifeSetPaperPrinted:
            compare(c, sorted(one_life_algebra(c.n, c.k, c.lives).result),
                    as_value(one_life_snapshot({c.n, c.k, c.lives}, ring)));
            break;
        case Subject::OneLifeSetReconciled: {
            const auto set = one_life_set(c.n, c.k, c.lives, FormulaMode::Reconciled);
            Value expected = set ? Value(sorted(*set)) : Value(std::monostate{});
            compare(c, std::move(expected), as_value(one_life_snapshot({c.n, c.k, c.lives}, ring)));
            break;
        }
        case Subject::ConstantSurvivor:
            compare(c, sim(c.n, r.lives_min), sim(c.n, c.lives));
            break;
        case Subject::NonCoprimeSurvey:
            compare(c, checked::mul(c.k + 1, sim(c.n / (c.k + 1), c.lives)), sim(c.n, c.lives));
            break;
    }
    return out;
}

}  // namespace detail

/// Compares a claim against the simulator over every admissible config of
/// the range. Work beyond `slot_cap` (estimated, deterministic) is not run
/// and the report is flagged incomplete.
inline VerificationReport verify(Subject subject, const SweepRange& range, const SweepOptions& opts = {}) {
    validate(range);
    auto planned = detail::plan(subject, range);
    VerificationReport report;
    report.subject = subject;
    report.range = range;

    Count budget = 0;
    std::size_t keep = 0;
    for (; keep < planned.size(); ++keep) {
        const Count next = budget + planned[keep].cost;
        if (next > opts.slot_cap || next < budget) break;
        budget = next;
    }
    report.complete = keep == planned.size();
    planned.resize(keep);

    auto results = detail::parallel_map<detail::Outcome>(planned.size(), opts.threads, [&](std::size_t i) {
        return detail::evaluate(subject, planned[i].c, range, opts.ring);
    });
    for (auto& res : results) {
        report.checked += res.checked;
        for (auto& m : res.mismatches) report.mismatches.push_back(std::move(m));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Open-problem surveys (descriptive only)

struct SurvivorRow {
    Count n = 0;
    Count k = 0;
    Count lives = 0;
    Label survivor = 0;

    friend bool operator==(const SurvivorRow&, const SurvivorRow&) = default;
};

struct NonCoprimeRow {
    Count n = 0;
    Count k = 0;
    Count lives = 0;
    Label survivor = 0;
    std::optional<Label> scaled_prediction;  // (k+1) * survivor(n/(k+1)) when defined
    std::optional<bool> scaling_holds;

    friend bool operator==(const NonCoprimeRow&, const NonCoprimeRow&) = default;
};

namespace detail {
inline void charge(Count& spent, Count cost, Count cap) {
    spent += cost;
    if (spent > cap) throw ResourceError("survey exceeds the slot cap");
}
}  // namespace detail

/// n in (k, n_max] whose survivor is the same for every lives in [1, lives_max].
/// Rows carry lives = 0 since they hold for the whole lives range.
inline std::vector<SurvivorRow> sweep_constant_survivor(Count k, Count n_max, Count lives_max,
                                                        const SweepOptions& opts = {}) {
    if (k == 0 || lives_max == 0) throw DomainError("k and lives_max must be >= 1");
    std::vector<Count> ns;
    Count spent = 0;
    for (Count n = k + 1; n <= n_max; ++n) {
        for (Count l = 1; l <= lives_max; ++l) detail::charge(spent, detail::game_cost(n, k, l), opts.slot_cap);
        ns.push_back(n);
    }
    auto found = detail::parallel_map<std::optional<Label>>(ns.size(), opts.threads, [&](std::size_t i) {
        const Label first = survivor_of({ns[i], k, 1}, opts.ring);
        for (Count l = 2; l <= lives_max; ++l)
            if (survivor_of({ns[i], k, l}, opts.ring) != first) return std::optional<Label>{};
        return std::optional<Label>{first};
    });
    std::vector<SurvivorRow> rows;
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (found[i]) rows.push_back({ns[i], k, 0, *found[i]});
    return rows;
}

/// Survivors of (n, k, lives = k) for k > n, gcd(n, k+1) == 1, sorted by (k, n).
inline std::vector<SurvivorRow> survey_k_greater_than_n(Count k_max, Count n_max,
                                                        const SweepOptions& opts = {}) {
    std::vector<GameConfig> configs;
    Count spent = 0;
    for (Count k = 2; k <= k_max; ++k)
        for (Count n = 1; n < k && n <= n_max; ++n)
            if (detail::coprime(n, k)) {
                detail::charge(spent, detail::game_cost(n, k, k), opts.slot_cap);
                configs.push_back({n, k, k});
            }
    auto survivors = detail::parallel_map<Label>(configs.size(), opts.threads, [&](std::size_t i) {
        return survivor_of(configs[i], opts.ring);
    });
    std::vector<SurvivorRow> rows;
    for (std::size_t i = 0; i < configs.size(); ++i)
        rows.push_back({configs[i].n, configs[i].k, configs[i].lives, survivors[i]});
    return rows;
}

/// Survivors for gcd(n, k+1) != 1 with a column telling whether the
/// (k+1)-scaling relation holds where it is defined. Sorted by (k, n, lives).
inline std::vector<NonCoprimeRow> survey_noncoprime(const SweepRange& range, const SweepOptions& opts = {}) {
    validate(range);
    std::vector<GameConfig> configs;
    if (range.coprime_only) return {};
    Count spent = 0;
    for (Count k = range.k_min; k <= range.k_max; ++k)
        for (Count n = range.n_min; n <= range.n_max; ++n) {
            if (detail::coprime(n, k)) continue;
            for (Count l = range.lives_min; l <= range.lives_max; ++l) {
                detail::charge(spent, 2 * detail::game_cost(n, k, l), opts.slot_cap);
                configs.push_back({n, k, l});
            }
        }
    return detail::parallel_map<NonCoprimeRow>(configs.size(), opts.threads, [&](std::size_t i) {
        const auto& c = configs[i];
        NonCoprimeRow row{c.n, c.k, c.lives, survivor_of(c, opts.ring), std::nullopt, std::nullopt};
        const Count base = c.k + 1;
        if (c.n % base == 0 && c.n / base >= c.k) {
            row.scaled_prediction = base * survivor_of({c.n / base, c.k, c.lives}, opts.ring);
            row.scaling_holds = *row.scaled_prediction == row.survivor;
        }
        return row;
    });
}

}  // namespace josephus::explore

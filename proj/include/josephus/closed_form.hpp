#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "josephus/checked.hpp"
#include "josephus/errors.hpp"
#include "josephus/game.hpp"
#include "josephus/types.hpp"

namespace josephus {

/// PaperPrinted evaluates a formula exactly as published; Reconciled is the
/// variant that agrees with the simulator.
enum class FormulaMode { Reconciled, PaperPrinted };

inline constexpr std::string_view to_string(FormulaMode m) {
    return m == FormulaMode::Reconciled ? "reconciled" : "paper";
}

namespace detail {
inline void require_positive(Count n, Count k) {
    if (n == 0) throw DomainError("n must be at least 1");
    if (k == 0) throw DomainError("k must be at least 1");
}
inline bool coprime_to_block(Count n, Count k) {
    return std::gcd(n, checked::add(k, 1)) == 1;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// One life: survivor

/// n = a(k+1)^b + k*m with 1 <= a <= k, a == n (mod k), b maximal.
struct T1Decomposition {
    Count a = 0;
    Count b = 0;
    Count m = 0;
    Count power = 1;  // (k+1)^b

    friend bool operator==(const T1Decomposition&, const T1Decomposition&) = default;
};

inline T1Decomposition decompose_t1(Count n, Count k) {
    detail::require_positive(n, k);
    const Count base = checked::add(k, 1);
    T1Decomposition d;
    d.a = n % k == 0 ? k : n % k;
    const auto fit = checked::largest_power_at_most(d.a, base, n);
    d.b = fit.exponent;
    d.power = fit.power;
    // (k+1)^b == 1 (mod k), so the remainder is a multiple of k
    d.m = checked::exact_div(checked::sub(n, checked::mul(d.a, d.power)), k, "decompose_t1");
    return d;
}

inline Label survivor_t1(Count n, Count k) {
    const auto d = decompose_t1(n, k);
    return checked::mul(checked::add(k, 1), d.m);
}

// ---------------------------------------------------------------------------
// One life: elimination time

/// For x = (k+1)m + s. When s == 0, n - k*m = a(k+1)^b with a not divisible
/// by k+1, and a = (k+1)q + r.
struct T2Decomposition {
    Count m = 0;
    Count s = 0;
    Count a = 0;
    Count b = 0;
    Count q = 0;
    Count r = 0;
};

inline T2Decomposition decompose_t2(Count n, Count k, Label x) {
    detail::require_positive(n, k);
    if (x >= n) throw DomainError("soldier label out of range");
    const Count base = checked::add(k, 1);
    T2Decomposition d;
    d.m = x / base;
    d.s = x % base;
    if (d.s != 0) return d;
    d.a = checked::sub(n, checked::mul(k, d.m));
    while (d.a % base == 0) {
        d.a /= base;
        ++d.b;
    }
    d.q = d.a / base;
    d.r = d.a % base;
    return d;
}

/// 1-based elimination ordinal of soldier x in the lives == 1 game played to
/// depletion.
inline Count elim_time_t2(Count n, Count k, Label x) {
    const auto d = decompose_t2(n, k, x);
    if (d.s != 0) return checked::sub(x, d.m);
    return checked::sub(n, d.q);
}

// ---------------------------------------------------------------------------
// Lemmas

/// Lives reduction for gcd(n, k+1) == 1: after k+1 rounds everyone has been
/// skipped once and lost k lives, so only lives mod k matters.
inline Count reduce_lives_lemma2(Count n, Count k, Count lives) {
    detail::require_positive(n, k);
    if (lives == 0) throw DomainError("lives must be at least 1");
    if (!detail::coprime_to_block(n, k)) {
        throw PreconditionError("lives reduction needs gcd(n, k+1) == 1");
    }
    if (lives <= k) return lives;
    return (lives - 1) % k + 1;
}

/// Survivor among (k+1)n soldiers given the survivor among n, for n >= k.
inline Label scale_lemma1(Count n, Count k, Count lives, Label inner_survivor) {
    detail::require_positive(n, k);
    if (lives == 0) throw DomainError("lives must be at least 1");
    if (n < k) throw PreconditionError("scaling needs n >= k");
    if (inner_survivor >= n) throw DomainError("inner survivor out of range");
    return checked::mul(checked::add(k, 1), inner_survivor);
}

// ---------------------------------------------------------------------------
// lives == k survivor

/// n = q(k+1) + r with 1 <= r <= k; b is the largest integer with
/// (k+1)^b <= q; i = (q-1) mod k. The qk soldiers left at the one-life point
/// relabel as r' + t(k+1) + i -> tk + i, and tk + i is the lives == 1
/// survivor of qk soldiers.
struct T3Decomposition {
    Count q = 0;
    Count r = 0;
    Count b = 0;
    Count i = 0;
    Count t = 0;
    Count power = 1;  // (k+1)^b

    friend bool operator==(const T3Decomposition&, const T3Decomposition&) = default;
};

inline void require_t3_domain(Count n, Count k) {
    detail::require_positive(n, k);
    if (n <= k) throw DomainError("lives == k formula needs n > k");
    if (!detail::coprime_to_block(n, k)) throw DomainError("lives == k formula needs gcd(n, k+1) == 1");
}

inline T3Decomposition decompose_t3(Count n, Count k) {
    require_t3_domain(n, k);
    const Count base = k + 1;
    T3Decomposition d;
    d.q = n / base;
    d.r = n % base;
    const auto fit = checked::largest_power_at_most(1, base, d.q);
    d.b = fit.exponent;
    d.power = fit.power;
    d.i = (d.q - 1) % k;
    const Count inner = checked::mul(base, checked::sub(d.q, d.power));
    d.t = checked::exact_div(checked::sub(inner, d.i), k, "decompose_t3");
    return d;
}

/// PaperPrinted: r + ((k+1)^2 (q - (k+1)^b) - i) / k, as published.
/// Reconciled: the remaining soldiers start at r + 1, not r, which adds one.
inline Label survivor_t3(Count n, Count k, FormulaMode mode = FormulaMode::Reconciled) {
    const auto d = decompose_t3(n, k);
    const Count base = k + 1;
    const Count numer = checked::sub(
        checked::mul(checked::mul(base, base), checked::sub(d.q, d.power)), d.i);
    const Count printed = checked::add(d.r, checked::exact_div(numer, k, "survivor_t3"));
    return mode == FormulaMode::PaperPrinted ? printed : checked::add(printed, 1);
}

// ---------------------------------------------------------------------------
// One-life set for lives < k

/// Intermediate values of the published one-life-set construction.
struct OneLifeAlgebra {
    std::vector<Count> s1;    // slots t < lives*n with t == 0 mod (k+1)
    std::vector<Label> s2;    // t mod n, in slot order
    Count offset_l = 0;       // [lives*n - (lives*n mod (k+1))] mod n
    std::int64_t drop_count = 0;  // k - (n - L), may be negative
    bool anomaly = false;     // drop_count outside [0, |s2|]
    std::vector<Label> result;
};

inline constexpr Count kOneLifeAlgebraCap = 50'000'000;

inline OneLifeAlgebra one_life_algebra(Count n, Count k, Count lives) {
    detail::require_positive(n, k);
    if (lives == 0) throw DomainError("lives must be at least 1");
    const Count total = checked::mul(lives, n);
    if (total > kOneLifeAlgebraCap) throw ResourceError("one-life algebra slot range too large");
    const Count base = checked::add(k, 1);
    OneLifeAlgebra alg;
    alg.s1.reserve(total / base + 1);
    for (Count t = 0; t < total; t += base) {
        alg.s1.push_back(t);
        alg.s2.push_back(t % n);
    }
    alg.offset_l = (total - total % base) % n;
    alg.drop_count = static_cast<std::int64_t>(k) - (static_cast<std::int64_t>(n) -
                                                     static_cast<std::int64_t>(alg.offset_l));
    std::int64_t drop = alg.drop_count;
    const auto len = static_cast<std::int64_t>(alg.s2.size());
    if (drop < 0) {
        alg.anomaly = true;
        drop = 0;
    } else if (drop > len) {
        alg.anomaly = true;
        drop = len;
    }
    alg.result.assign(alg.s2.begin() + drop, alg.s2.end());
    return alg;
}

/// Both sides of the one-life-set comparison for one configuration.
struct OneLifeComparison {
    GameConfig config;
    OneLifeAlgebra printed;
    std::optional<OneLifeSnapshot> snapshot;  // nullopt: no all-ones round boundary
};

inline void require_one_life_domain(Count n, Count k, Count lives, FormulaMode mode) {
    detail::require_positive(n, k);
    if (lives == 0) throw DomainError("lives must be at least 1");
    if (!detail::coprime_to_block(n, k)) throw DomainError("one-life set needs gcd(n, k+1) == 1");
    const bool ok = mode == FormulaMode::PaperPrinted ? lives < k : lives <= k;
    if (!ok) throw DomainError("one-life set needs lives < k (lives <= k when reconciled)");
}

inline OneLifeComparison compare_one_life(Count n, Count k, Count lives,
                                          RingKind ring = RingKind::OrderStatistic) {
    require_one_life_domain(n, k, lives, FormulaMode::Reconciled);
    OneLifeComparison c;
    c.config = {n, k, lives};
    c.printed = one_life_algebra(n, k, lives);
    c.snapshot = one_life_snapshot(c.config, ring);
    return c;
}

/// Ordered labels with one life left. PaperPrinted runs the published steps;
/// Reconciled is the simulator's one-life snapshot (nullopt when the game has
/// no such round boundary).
inline std::optional<std::vector<Label>> one_life_set(Count n, Count k, Count lives,
                                                      FormulaMode mode = FormulaMode::Reconciled) {
    require_one_life_domain(n, k, lives, mode);
    if (mode == FormulaMode::PaperPrinted) return one_life_algebra(n, k, lives).result;
    auto snap = one_life_snapshot({n, k, lives}, RingKind::OrderStatistic);
    if (!snap) return std::nullopt;
    return std::move(snap->alive);
}

// ---------------------------------------------------------------------------
// Dispatcher

enum class FelineRoute { Theorem1, Theorem3, Simulation };

struct FelineResult {
    Label survivor = 0;
    FelineRoute route = FelineRoute::Simulation;  // route taken at the innermost level
    Count scalings = 0;                           // times the (k+1) scaling was applied
    Count reduced_lives = 0;
};

inline constexpr Count kDefaultSimulationCap = 500'000'000;

/// Survivor of (n, k, lives) using closed forms where they apply:
/// scale down by k+1 while possible, reduce lives mod k under coprimality,
/// then the lives == 1 or lives == k formulas; otherwise simulate.
inline FelineResult survivor_feline_detail(Count n, Count k, Count lives,
                                           Count simulation_cap = kDefaultSimulationCap,
                                           FormulaMode mode = FormulaMode::Reconciled) {
    validate(GameConfig{n, k, lives});
    const Count base = checked::add(k, 1);
    FelineResult res;
    Count multiplier = 1;
    while (n % base == 0 && n / base >= k) {
        n /= base;
        multiplier = checked::mul(multiplier, base);
        ++res.scalings;
    }
    Count eff = lives;
    const bool coprime = detail::coprime_to_block(n, k);
    if (coprime) eff = reduce_lives_lemma2(n, k, lives);
    res.reduced_lives = eff;

    Label inner = 0;
    if (eff == 1) {
        inner = survivor_t1(n, k);
        res.route = FelineRoute::Theorem1;
    } else if (coprime && eff == k && n > k) {
        inner = survivor_t3(n, k, mode);
        res.route = FelineRoute::Theorem3;
    } else {
        const GameConfig cfg{n, k, eff};
        if (slot_bound(cfg) > simulation_cap) {
            throw ResourceError("fallback simulation exceeds the slot cap");
        }
        inner = survivor_of(cfg);
        res.route = FelineRoute::Simulation;
    }
    res.survivor = checked::mul(multiplier, inner);
    return res;
}

inline Label survivor_feline(Count n, Count k, Count lives,
                             Count simulation_cap = kDefaultSimulationCap) {
    return survivor_feline_detail(n, k, lives, simulation_cap).survivor;
}

}  // namespace josephus

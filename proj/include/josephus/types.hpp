#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "josephus/errors.hpp"

namespace josephus {

using Label = std::uint64_t;
using Count = std::uint64_t;

/// One game: n soldiers labeled 0..n-1 in circle order, hit blocks of k,
/// and `lives` hits needed to eliminate a soldier.
struct GameConfig {
    Count n = 1;
    Count k = 1;
    Count lives = 1;

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

inline void validate(const GameConfig& c) {
    if (c.n == 0) throw DomainError("n must be at least 1");
    if (c.k == 0) throw DomainError("k must be at least 1");
    if (c.lives == 0) throw DomainError("lives must be at least 1");
}

enum class RunMode { Survivor, Depletion };

enum class RingKind { DenseArray, DoublyLinked, OrderStatistic };

inline constexpr std::string_view to_string(RingKind kind) {
    switch (kind) {
        case RingKind::DenseArray: return "dense";
        case RingKind::DoublyLinked: return "linked";
        case RingKind::OrderStatistic: return "indexed";
    }
    return "?";
}

inline std::optional<RingKind> parse_ring_kind(std::string_view s) {
    if (s == "dense") return RingKind::DenseArray;
    if (s == "linked") return RingKind::DoublyLinked;
    if (s == "indexed") return RingKind::OrderStatistic;
    return std::nullopt;
}

enum class EventKind { Skip, Hit, Eliminate, Finished };

struct GameEvent {
    EventKind kind = EventKind::Skip;
    Label soldier = 0;           // unused for Finished
    Count remaining_lives = 0;   // Hit only
    Count ordinal = 0;           // Eliminate only, 1-based
    std::optional<Label> survivor;  // Finished in survivor mode

    friend bool operator==(const GameEvent&, const GameEvent&) = default;

    static GameEvent skip(Label x) { return {EventKind::Skip, x, 0, 0, std::nullopt}; }
    static GameEvent hit(Label x, Count left) { return {EventKind::Hit, x, left, 0, std::nullopt}; }
    static GameEvent eliminate(Label x, Count ord) { return {EventKind::Eliminate, x, 0, ord, std::nullopt}; }
    static GameEvent finished(std::optional<Label> s) { return {EventKind::Finished, 0, 0, 0, s}; }
};

inline std::string to_string(const GameEvent& e) {
    switch (e.kind) {
        case EventKind::Skip: return "S" + std::to_string(e.soldier);
        case EventKind::Hit:
            return "H" + std::to_string(e.soldier) + ":" + std::to_string(e.remaining_lives);
        case EventKind::Eliminate:
            return "E" + std::to_string(e.soldier) + "#" + std::to_string(e.ordinal);
        case EventKind::Finished:
            return e.survivor ? "F" + std::to_string(*e.survivor) : std::string("F-");
    }
    return "?";
}

struct Elimination {
    Label soldier = 0;
    Count ordinal = 0;

    friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct GameOutcome {
    GameConfig config;
    std::optional<Label> survivor;  // absent in depletion mode
    std::vector<Elimination> order;

    std::vector<Label> order_labels() const {
        std::vector<Label> out;
        out.reserve(order.size());
        for (const auto& e : order) out.push_back(e.soldier);
        return out;
    }
};

/// Circle state at the first round boundary where every alive soldier has
/// exactly one life left. `alive` starts at the cursor.
struct OneLifeSnapshot {
    std::vector<Label> alive;
    Label cursor = 0;
    Count slots_elapsed = 0;

    friend bool operator==(const OneLifeSnapshot&, const OneLifeSnapshot&) = default;
};

}  // namespace josephus

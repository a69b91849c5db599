#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "josephus/checked.hpp"
#include "josephus/errors.hpp"
#include "josephus/rings.hpp"
#include "josephus/types.hpp"

namespace josephus {

/// Event-level simulation of one game.
///
/// A round is one Skip of the soldier under the cursor followed by up to k
/// Hits on the next alive soldiers (wrapping around the circle, possibly onto
/// the soldier just skipped). Dead soldiers take no slots. The first action of
/// every game skips soldier 0. In survivor mode the game ends the instant one
/// soldier is left, even mid-block; depletion mode (lives == 1 only) runs
/// until the circle is empty. Once the end is reached, the next step reports
/// Finished and any further step is a StateError.
template <AliveRing Ring>
class Game {
public:
    explicit Game(GameConfig config, RunMode mode = RunMode::Survivor)
        : config_(config), mode_(mode), ring_((validate(config), config.n)),
          lives_(config.n, config.lives), not_one_(config.lives == 1 ? 0 : config.n) {
        if (mode == RunMode::Depletion && config.lives != 1) {
            throw UnsupportedModeError("depletion mode requires lives == 1");
        }
    }

    const GameConfig& config() const { return config_; }
    RunMode mode() const { return mode_; }
    const Ring& ring() const { return ring_; }

    Count alive() const { return ring_.size(); }
    Count slots_elapsed() const { return slots_; }
    Count eliminations() const { return ordinal_; }
    Count lives_of(Label x) const { return lives_.at(x); }

    /// The end condition has been reached (Finished may not be emitted yet).
    bool over() const {
        return mode_ == RunMode::Survivor ? ring_.size() <= 1 : ring_.empty();
    }
    bool finished() const { return finished_; }

    /// Next action is a Skip.
    bool at_round_boundary() const { return hits_left_ == 0; }

    /// Every alive soldier has exactly one life.
    bool all_one_life() const { return not_one_ == 0; }

    GameEvent step() {
        if (finished_) throw StateError("step on a finished game");
        if (over()) {
            finished_ = true;
            if (mode_ == RunMode::Survivor) return GameEvent::finished(ring_.current());
            return GameEvent::finished(std::nullopt);
        }
        ++slots_;
        if (hits_left_ == 0) {
            const Label skipped = ring_.current();
            ring_.advance(1);
            hits_left_ = config_.k;
            return GameEvent::skip(skipped);
        }
        --hits_left_;
        const Label target = ring_.current();
        Count& left = lives_[target];
        --left;
        if (left == 0) {
            ring_.remove_current();
            return GameEvent::eliminate(target, ++ordinal_);
        }
        if (left == 1) --not_one_;
        ring_.advance(1);
        return GameEvent::hit(target, left);
    }

    OneLifeSnapshot snapshot() const {
        OneLifeSnapshot s;
        s.alive = ring_.labels_from_cursor();
        s.cursor = s.alive.empty() ? 0 : s.alive.front();
        s.slots_elapsed = slots_;
        return s;
    }

private:
    GameConfig config_;
    RunMode mode_;
    Ring ring_;
    std::vector<Count> lives_;
    Count not_one_ = 0;
    Count hits_left_ = 0;
    Count slots_ = 0;
    Count ordinal_ = 0;
    bool finished_ = false;
};

template <AliveRing Ring>
GameOutcome run_with(const GameConfig& config, RunMode mode = RunMode::Survivor) {
    Game<Ring> game(config, mode);
    GameOutcome out;
    out.config = config;
    out.order.reserve(config.n);
    for (;;) {
        const GameEvent e = game.step();
        if (e.kind == EventKind::Eliminate) {
            out.order.push_back({e.soldier, e.ordinal});
        } else if (e.kind == EventKind::Finished) {
            out.survivor = e.survivor;
            break;
        }
    }
    return out;
}

inline GameOutcome run(const GameConfig& config, RunMode mode = RunMode::Survivor,
                       RingKind ring = RingKind::DoublyLinked) {
    validate(config);
    switch (ring) {
        case RingKind::DenseArray: return run_with<DenseRing>(config, mode);
        case RingKind::OrderStatistic: return run_with<IndexedRing>(config, mode);
        case RingKind::DoublyLinked: break;
    }
    return run_with<LinkedRing>(config, mode);
}

inline Label survivor_of(const GameConfig& config, RingKind ring = RingKind::DoublyLinked) {
    return *run(config, RunMode::Survivor, ring).survivor;
}

/// Full event stream of a game, ending with Finished.
template <AliveRing Ring>
std::vector<GameEvent> trace_with(const GameConfig& config, RunMode mode = RunMode::Survivor) {
    Game<Ring> game(config, mode);
    std::vector<GameEvent> events;
    do {
        events.push_back(game.step());
    } while (!game.finished());
    return events;
}

inline std::vector<GameEvent> trace(const GameConfig& config, RunMode mode, RingKind ring) {
    validate(config);
    switch (ring) {
        case RingKind::DenseArray: return trace_with<DenseRing>(config, mode);
        case RingKind::OrderStatistic: return trace_with<IndexedRing>(config, mode);
        case RingKind::DoublyLinked: break;
    }
    return trace_with<LinkedRing>(config, mode);
}

template <AliveRing Ring>
std::optional<OneLifeSnapshot> one_life_snapshot_with(const GameConfig& config) {
    Game<Ring> game(config);
    if (game.all_one_life()) return game.snapshot();
    while (!game.over()) {
        game.step();
        if (!game.over() && game.at_round_boundary() && game.all_one_life()) return game.snapshot();
    }
    return std::nullopt;
}

/// First round boundary at which every alive soldier has one life, or
/// nullopt if the game ends before one occurs.
inline std::optional<OneLifeSnapshot> one_life_snapshot(const GameConfig& config,
                                                        RingKind ring = RingKind::DoublyLinked) {
    validate(config);
    switch (ring) {
        case RingKind::DenseArray: return one_life_snapshot_with<DenseRing>(config);
        case RingKind::OrderStatistic: return one_life_snapshot_with<IndexedRing>(config);
        case RingKind::DoublyLinked: break;
    }
    return one_life_snapshot_with<LinkedRing>(config);
}

/// Survivor of the game continued from a snapshot. From a one-life round
/// boundary the rest of the game is a lives == 1 game on the alive soldiers,
/// relabeled 0.. from the cursor.
inline Label resume_survivor(const OneLifeSnapshot& snap, Count k,
                             RingKind ring = RingKind::DoublyLinked) {
    if (snap.alive.empty()) throw StateError("snapshot has no alive soldiers");
    const Label relabeled = survivor_of({snap.alive.size(), k, 1}, ring);
    return snap.alive[relabeled];
}

/// Upper bound on slots a survivor-mode game can take: at most n*lives hits,
/// and every round holds at least one hit.
inline Count slot_bound(const GameConfig& config) {
    return checked::mul(2, checked::mul(config.n, config.lives));
}

}  // namespace josephus

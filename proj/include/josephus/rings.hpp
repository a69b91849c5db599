#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <vector>

#include "josephus/errors.hpp"
#include "josephus/types.hpp"

// Alive-set structures for the simulator. Each holds the labels 0..n-1 that
// are still in the game, in circle order, plus a cursor on one of them.
// All three must produce identical traces; they differ only in cost.

namespace josephus {

template <class R>
concept AliveRing = requires(R r, const R cr, Count steps) {
    { cr.size() } -> std::convertible_to<Count>;
    { cr.empty() } -> std::convertible_to<bool>;
    { cr.current() } -> std::convertible_to<Label>;
    { r.advance(steps) } -> std::convertible_to<Label>;
    { r.remove_current() } -> std::convertible_to<Label>;
    { cr.labels_from_cursor() } -> std::convertible_to<std::vector<Label>>;
};

namespace detail {
inline void require_nonempty(Count size, const char* op) {
    if (size == 0) throw StateError(std::string(op) + " on an empty ring");
}
}  // namespace detail

/// Alive flags over 0..n-1; the cursor walks the flag array linearly.
class DenseRing {
public:
    explicit DenseRing(Count n) : alive_(n, 1), size_(n) {}

    Count size() const { return size_; }
    bool empty() const { return size_ == 0; }

    Label current() const {
        detail::require_nonempty(size_, "current");
        return cursor_;
    }

    Label advance(Count steps) {
        detail::require_nonempty(size_, "advance");
        steps %= size_;
        while (steps-- > 0) cursor_ = next_alive(cursor_);
        return cursor_;
    }

    Label remove_current() {
        detail::require_nonempty(size_, "remove_current");
        const Label removed = cursor_;
        alive_[removed] = 0;
        --size_;
        if (size_ > 0) cursor_ = next_alive(removed);
        return removed;
    }

    std::vector<Label> labels_from_cursor() const {
        std::vector<Label> out;
        out.reserve(size_);
        if (size_ == 0) return out;
        Label x = cursor_;
        do {
            out.push_back(x);
            x = next_alive(x);
        } while (x != cursor_);
        return out;
    }

private:
    Label next_alive(Label from) const {
        const Count n = alive_.size();
        Label x = from;
        do {
            x = (x + 1 == n) ? 0 : x + 1;
        } while (!alive_[x]);
        return x;
    }

    std::vector<std::uint8_t> alive_;
    Count size_ = 0;
    Label cursor_ = 0;
};

/// Circular doubly linked list stored as next/prev index arrays.
/// Single steps and removals are O(1).
class LinkedRing {
public:
    explicit LinkedRing(Count n) : next_(n), prev_(n), size_(n) {
        for (Count i = 0; i < n; ++i) {
            next_[i] = (i + 1 == n) ? 0 : i + 1;
            prev_[i] = (i == 0) ? n - 1 : i - 1;
        }
    }

    Count size() const { return size_; }
    bool empty() const { return size_ == 0; }

    Label current() const {
        detail::require_nonempty(size_, "current");
        return cursor_;
    }

    Label advance(Count steps) {
        detail::require_nonempty(size_, "advance");
        steps %= size_;
        // walking backwards is shorter past the halfway point
        if (steps > size_ / 2) {
            for (Count back = size_ - steps; back > 0; --back) cursor_ = prev_[cursor_];
        } else {
            for (; steps > 0; --steps) cursor_ = next_[cursor_];
        }
        return cursor_;
    }

    Label remove_current() {
        detail::require_nonempty(size_, "remove_current");
        const Label removed = cursor_;
        const Label nx = next_[removed];
        const Label pv = prev_[removed];
        next_[pv] = nx;
        prev_[nx] = pv;
        --size_;
        cursor_ = nx;
        return removed;
    }

    std::vector<Label> labels_from_cursor() const {
        std::vector<Label> out;
        out.reserve(size_);
        Label x = cursor_;
        for (Count i = 0; i < size_; ++i) {
            out.push_back(x);
            x = next_[x];
        }
        return out;
    }

private:
    std::vector<Label> next_;
    std::vector<Label> prev_;
    Count size_ = 0;
    Label cursor_ = 0;
};

/// Fenwick tree over the alive bitmap. The cursor is kept as a rank among
/// alive labels, so a jump of any length costs one select, O(log n).
class IndexedRing {
public:
    explicit IndexedRing(Count n) : tree_(n + 1, 0), size_(n) {
        // linear-time build of a tree over all ones
        for (Count i = 1; i <= n; ++i) {
            tree_[i] += 1;
            const Count parent = i + (i & (~i + 1));
            if (parent <= n) tree_[parent] += tree_[i];
        }
        top_bit_ = n == 0 ? 0 : std::bit_floor(n);
        if (n > 0) label_ = select(0);
    }

    Count size() const { return size_; }
    bool empty() const { return size_ == 0; }

    Label current() const {
        detail::require_nonempty(size_, "current");
        return label_;
    }

    Label advance(Count steps) {
        detail::require_nonempty(size_, "advance");
        rank_ = (rank_ + steps % size_) % size_;
        label_ = select(rank_);
        return label_;
    }

    Label remove_current() {
        detail::require_nonempty(size_, "remove_current");
        const Label removed = label_;
        for (Count i = removed + 1; i < tree_.size(); i += i & (~i + 1)) --tree_[i];
        --size_;
        if (size_ > 0) {
            if (rank_ == size_) rank_ = 0;
            label_ = select(rank_);
        }
        return removed;
    }

    std::vector<Label> labels_from_cursor() const {
        std::vector<Label> out;
        out.reserve(size_);
        for (Count i = 0; i < size_; ++i) out.push_back(select((rank_ + i) % size_));
        return out;
    }

    /// Label of the alive soldier with the given 0-based rank.
    Label select(Count rank) const {
        Count pos = 0;
        Count remaining = rank + 1;
        for (Count step = top_bit_; step > 0; step >>= 1) {
            const Count probe = pos + step;
            if (probe < tree_.size() && tree_[probe] < remaining) {
                pos = probe;
                remaining -= tree_[probe];
            }
        }
        return pos;  // 1-based index pos+1 holds the answer
    }

private:
    std::vector<Count> tree_;
    Count size_ = 0;
    Count top_bit_ = 0;
    Count rank_ = 0;
    Label label_ = 0;
};

static_assert(AliveRing<DenseRing>);
static_assert(AliveRing<LinkedRing>);
static_assert(AliveRing<IndexedRing>);

/// Calls f with a freshly built ring of the requested kind.
template <class F>
decltype(auto) with_ring(RingKind kind, Count n, F&& f) {
    switch (kind) {
        case RingKind::DenseArray: return f(DenseRing(n));
        case RingKind::OrderStatistic: return f(IndexedRing(n));
        case RingKind::DoublyLinked: break;
    }
    return f(LinkedRing(n));
}

}  // namespace josephus

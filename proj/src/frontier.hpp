#pragma once

// Edge-by-edge dynamic programming over a vertex frontier.
//
// Edges are processed in an order derived from a greedy vertex layout. A vertex is
// "active" between its first and last processed incident edge; only active vertices
// carry state, packed into a 128-bit key as fixed-width slots. Both the Eulerian
// parity count and the monomial coefficient are sums over per-edge choices subject
// to one integer constraint per vertex, so they share this plan.

#include "atcert/errors.hpp"
#include "atcert/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace atcert::detail {

using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const noexcept {
        auto lo = static_cast<std::uint64_t>(k);
        auto hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
        h ^= h >> 31;
        return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
    }
};

struct FrontierStep {
    int edge;        ///< index into the edge list handed to the plan
    int a, b;        ///< endpoints
    int slot_a, slot_b;
    int remaining_a, remaining_b;  ///< incident edges of a / b still unprocessed after this step
};

struct FrontierPlan {
    std::vector<FrontierStep> steps;
    int slot_bits = 1;
    int slot_count = 0;

    std::uint32_t get(Key k, int slot) const {
        auto shift = static_cast<unsigned>(slot * slot_bits);
        return static_cast<std::uint32_t>((k >> shift) & ((Key{1} << slot_bits) - 1));
    }

    Key set(Key k, int slot, std::uint32_t value) const {
        auto shift = static_cast<unsigned>(slot * slot_bits);
        Key mask = ((Key{1} << slot_bits) - 1) << shift;
        return (k & ~mask) | (Key{value} << shift);
    }
};

/// Builds the processing order for `edges` on `n` vertices. `max_value` bounds the
/// per-slot value the caller will store.
inline FrontierPlan make_frontier_plan(int n, const std::vector<Edge>& edges, std::uint32_t max_value) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        adj[edges[i].u].emplace_back(edges[i].v, i);
        adj[edges[i].v].emplace_back(edges[i].u, i);
    }

    // Greedy layout: repeatedly take the unplaced vertex with the most placed
    // neighbours, breaking ties by fewer unplaced neighbours.
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<int> layout;
    layout.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            int fv = placed_nbrs[v], fb = placed_nbrs[best];
            int rv = static_cast<int>(adj[v].size()) - fv, rb = static_cast<int>(adj[best].size()) - fb;
            if (fv > fb || (fv == fb && rv < rb)) best = v;
        }
        placed[best] = 1;
        position[best] = step;
        layout.push_back(best);
        for (auto [w, e] : adj[best]) ++placed_nbrs[w];
    }

    FrontierPlan plan;
    plan.slot_bits = std::max(1, static_cast<int>(std::bit_width(max_value)));
    std::vector<int> remaining(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) remaining[v] = static_cast<int>(adj[v].size());
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    std::vector<int> free_slots;
    int next_slot = 0;
    auto acquire = [&](int v) {
        if (slot[v] >= 0) return;
        if (!free_slots.empty()) {
            slot[v] = free_slots.back();
            free_slots.pop_back();
        } else {
            slot[v] = next_slot++;
        }
    };

    for (int v : layout) {
        std::vector<std::pair<int, int>> back;
        for (auto [w, e] : adj[v])
            if (position[w] < position[v]) back.emplace_back(position[w], e);
        std::sort(back.begin(), back.end());
        for (auto [pos, e] : back) {
            int a = edges[e].u, b = edges[e].v;
            acquire(a);
            acquire(b);
            --remaining[a];
            --remaining[b];
            plan.steps.push_back({e, a, b, slot[a], slot[b], remaining[a], remaining[b]});
            if (remaining[a] == 0) free_slots.push_back(slot[a]);
            if (remaining[b] == 0) free_slots.push_back(slot[b]);
        }
    }
    plan.slot_count = next_slot;
    if (plan.slot_count * plan.slot_bits > 128)
        throw ResourceLimit("frontier of " + std::to_string(plan.slot_count) + " vertices exceeds the exact-count state size");
    return plan;
}

inline std::uint32_t zigzag(int x) { return x >= 0 ? static_cast<std::uint32_t>(x) << 1 : (static_cast<std::uint32_t>(-x) << 1) - 1; }
inline int unzigzag(std::uint32_t z) { return (z & 1U) ? -static_cast<int>((z + 1) >> 1) : static_cast<int>(z >> 1); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("64-bit overflow in exact count");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("64-bit overflow in exact count");
    return r;
}

}  // namespace atcert::detail

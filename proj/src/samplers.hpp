#pragma once

#include <utility>
#include <vector>

#include "model.hpp"
#include "rng.hpp"

namespace saw {

// Directions whose addition keeps the walk self-avoiding, inside
// [0,k]^2, and able to reach the corner (k,k) through unvisited
// vertices (flood-fill test). Candidates are reported in N, E, S, W
// order. The walk must be self-avoiding, start at (0,0) and stay
// inside the square; violations raise std::invalid_argument.
std::vector<Dir> eligible_steps_crossing(const Walk& w, int k);

// Grid-based fast path behind eligible_steps_crossing, shared with the
// exhaustive enumerator: occupied holds the walk's vertices, head its
// last one. Writes candidates to out, returns their count.
int eligible_crossing_steps(const Grid& occupied, Point head, int k, Dir out[4]);

// Knuth's sampler: grow a walk from (0,0) to (k,k), choosing uniformly
// among eligible steps. Never dead-ends.
Sample sample_crossing_saw(int k, RandomStream& rng);

// North/East walk from (0,0) to (k,k); a step is free (probability 1/2)
// until the walk reaches the north or east side, forced afterwards.
Sample sample_directed(int k, RandomStream& rng);

// North/East/South walk from (0,0) to (l,k) inside the k x l rectangle.
// Eligible steps are {N,E,S} minus moves that exit the rectangle,
// reverse the current vertical run, or (at column l) are not N.
Sample sample_nes(int k, int l, RandomStream& rng);

// Unconfined untrapped walk of exactly n steps from the origin: at each
// step the eligible candidates are the self-avoiding directions whose
// addition does not trap the walk. All four directions are eligible for
// the first step.
Sample sample_untrapped(int n, RandomStream& rng);

// True iff appending d to an untrapped self-avoiding walk yields a
// trapped walk, decided by the three winding-number cases (checked in
// the two frames that map the last step to W: a rotation, and a
// reflection composed with a rotation). Throws std::invalid_argument if
// the walk revisits a vertex or appending d would. The caller is
// responsible for the walk itself being untrapped; that precondition is
// not (cheaply) checkable and is not verified.
bool is_trapping_step(const Walk& w, Dir d);

// Flood-fill oracle for the same question: appending d traps the walk
// iff the unvisited component of the new head is finite, tested by
// escaping the walk's bounding box inflated by one.
bool is_trapping_step_oracle(const Walk& w, Dir d);

// Per-step counts of Lemma-type contacts for a NES crossing walk of a
// height-k rectangle (width inferred from the walk's E steps), plus the
// exact 1/p they imply. h: horizontal steps strictly inside the strip,
// h_c: horizontal steps on y=0 or y=k, v: vertical steps ending strictly
// inside, v_c: vertical steps ending on the boundary; all counted on the
// prefix before the last E step. 1/p = 2 * 3^h * 2^{h_c} * 2^v.
struct NesStats {
    std::uint64_t h = 0;
    std::uint64_t h_c = 0;
    std::uint64_t v = 0;
    std::uint64_t v_c = 0;
};
std::pair<NesStats, BigInt> nes_walk_stats(const Walk& w, int k);

// Replay the model's eligibility rules over an existing walk and
// recover its probability trace. Throws std::invalid_argument if some
// step of the walk is not eligible under the model's rules.
ProbTrace recompute_trace(Model model, int k, int l, const Walk& w);

}  // namespace saw

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

/// The two votes a non-matching edge receives relative to a reference
/// matching: first component from the man, second from the woman. With
/// strict lists neither component can be 0.
struct EdgeLabel {
    int man_vote;
    int woman_vote;

    bool operator==(const EdgeLabel&) const = default;
};

/// Head-to-head counts between two matchings.
struct VoteTally {
    int for_first;
    int for_second;

    bool operator==(const VoteTally&) const = default;
};

/// One alternating path or cycle of a symmetric difference M xor N, with the
/// labels of its N-edges counted against M.
struct AltComponent {
    bool is_cycle = false;
    std::vector<std::pair<Side, int>> vertices; // alternating sequence
    int plus_plus = 0;
    int minus_minus = 0;
};

/// +1 if u strictly prefers p over q, -1 for the reverse, 0 when identical.
/// Absent (nullopt) loses to any neighbor. Throws on a non-neighbor argument.
int prefers(const MarriageInstance& inst, Side side, int u, std::optional<int> p,
            std::optional<int> q);

/// Labels edge (m, w) against M. Requires (m, w) in E and not in M.
EdgeLabel label_edge(const MarriageInstance& inst, const Matching& m_ref, int m, int w);

/// for_first = vertices strictly preferring M over N; for_second symmetric.
VoteTally tally(const MarriageInstance& inst, const Matching& m, const Matching& n);

/// Decomposes M xor N into alternating paths and cycles. Paths start at the
/// lexicographically smaller endpoint id; cycles start at their smallest
/// vertex and run toward its smaller neighbor.
std::vector<AltComponent> symmetric_difference(const MarriageInstance& inst,
                                               const Matching& m, const Matching& n);

} // namespace popmatch

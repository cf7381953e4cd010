#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "popmatch/errors.hpp"

namespace popmatch {

class Matching;

/// Which side of the bipartition a vertex lives on.
enum class Side { men, women };

/// A bipartite preference instance: men, women, strict preference lists over
/// neighbors, and a set of critical vertices confined to one side.
///
/// Immutable after construction; every constructor path runs full validation
/// (unique ids, disjoint sides, strict lists, mutual adjacency, one-sided
/// critical set).
class MarriageInstance {
public:
    struct Builder {
        std::vector<std::string> men;
        std::vector<std::string> women;
        std::vector<std::string> critical;
        // id -> preferred partner ids, best first
        std::vector<std::pair<std::string, std::vector<std::string>>> prefs;

        MarriageInstance build() const;
    };

    int num_men() const { return static_cast<int>(men_ids_.size()); }
    int num_women() const { return static_cast<int>(women_ids_.size()); }

    const std::string& man_id(int m) const { return men_ids_[m]; }
    const std::string& woman_id(int w) const { return women_ids_[w]; }
    const std::vector<std::string>& men_ids() const { return men_ids_; }
    const std::vector<std::string>& women_ids() const { return women_ids_; }

    std::optional<int> man_index(std::string_view id) const;
    std::optional<int> woman_index(std::string_view id) const;

    /// Preference list of man m as woman indices, most preferred first.
    const std::vector<int>& pref_of_man(int m) const { return pref_men_[m]; }
    const std::vector<int>& pref_of_woman(int w) const { return pref_women_[w]; }

    /// Position of w in m's list, or -1 when (m, w) is not an edge.
    int rank_by_man(int m, int w) const { return rank_men_[m][w]; }
    int rank_by_woman(int w, int m) const { return rank_women_[w][m]; }

    bool is_edge(int m, int w) const { return rank_men_[m][w] >= 0; }

    bool man_critical(int m) const { return critical_men_[m] != 0; }
    bool woman_critical(int w) const { return critical_women_[w] != 0; }

    /// Number of critical vertices (the paper's ell).
    int critical_count() const { return critical_count_; }
    bool critical_on_women() const { return critical_on_women_; }

    /// All edges as (man index, woman index), sorted by man then woman index.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool operator==(const MarriageInstance& other) const;

private:
    friend MarriageInstance parse_instance(std::string_view);

    std::vector<std::string> men_ids_;
    std::vector<std::string> women_ids_;
    std::unordered_map<std::string, int> man_index_;
    std::unordered_map<std::string, int> woman_index_;
    std::vector<std::vector<int>> pref_men_;
    std::vector<std::vector<int>> pref_women_;
    std::vector<std::vector<int>> rank_men_;
    std::vector<std::vector<int>> rank_women_;
    std::vector<char> critical_men_;
    std::vector<char> critical_women_;
    std::vector<std::pair<int, int>> edges_;
    int critical_count_ = 0;
    bool critical_on_women_ = false;

    void finish_validation();
};

/// Deterministic random-instance recipe.
struct GenSpec {
    int n_men = 0;
    int n_women = 0;
    double density = 1.0; // probability per potential edge, in [0, 1]
    int n_critical = 0;
    std::uint64_t seed = 0;
};

/// Parses the line-oriented instance format:
///   men <id> <id> ...
///   women <id> ...
///   critical <id> ...          (optional)
///   pref <id>: <id> <id> ...   (one per vertex, most preferred first)
/// A '#' at the start of a whitespace-separated token begins a comment, so
/// reduced-instance names like m1#0 survive a round trip.
MarriageInstance parse_instance(std::string_view text);

/// Canonical text: men, women, critical (omitted when empty), then pref lines
/// for men and women in declared order. parse(serialize(i)) == i.
std::string serialize_instance(const MarriageInstance& inst);

/// True iff every critical vertex is matched in M.
bool is_feasible(const MarriageInstance& inst, const Matching& m);

/// True iff some matching saturates the critical set. Runs augmenting-path
/// search from the critical vertices only.
bool has_feasible(const MarriageInstance& inst);

/// Returns an instance whose critical set lives on the men side, plus a flag
/// telling whether the sides were swapped to get there.
std::pair<MarriageInstance, bool> normalize_critical_side(const MarriageInstance& inst);

/// Deterministic function of the spec. Edges are sampled per the density,
/// preference lists are uniform random permutations of the neighbor sets, and
/// the whole draw is retried (bounded) until has_feasible holds.
MarriageInstance generate_random(const GenSpec& spec);

} // namespace popmatch

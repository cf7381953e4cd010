#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

/// A set of disjoint man-woman edges of one instance, with O(1) partner
/// lookup on both sides. -1 stands for "unmatched".
class Matching {
public:
    Matching() = default;
    Matching(const MarriageInstance& inst, const std::vector<std::pair<int, int>>& edges);

    static Matching empty(const MarriageInstance& inst) { return Matching(inst, {}); }

    int partner_of_man(int m) const { return man_partner_[m]; }
    int partner_of_woman(int w) const { return woman_partner_[w]; }
    bool man_matched(int m) const { return man_partner_[m] >= 0; }
    bool woman_matched(int w) const { return woman_partner_[w] >= 0; }
    bool contains(int m, int w) const { return man_partner_[m] == w; }

    int size() const { return size_; }

    /// Edges sorted by (man index, woman index).
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Matching& other) const {
        return man_partner_ == other.man_partner_;
    }
    bool operator<(const Matching& other) const {
        return man_partner_ < other.man_partner_;
    }

private:
    std::vector<int> man_partner_;
    std::vector<int> woman_partner_;
    int size_ = 0;
};

/// One "<man> <woman>" pair per line; '#' comments as in the instance format.
Matching parse_matching(const MarriageInstance& inst, std::string_view text);
std::string serialize_matching(const MarriageInstance& inst, const Matching& m);

} // namespace popmatch

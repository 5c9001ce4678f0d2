#pragma once

#include <span>
#include <vector>

#include "pc/coloring.hpp"

namespace pc {

/// Lexicographic enumeration of color vectors over 1..k.
///
/// With `up_to_renaming`, only one representative per palette permutation is
/// produced (restricted growth: each entry exceeds the running maximum by at
/// most one, so the first entry is always 1). Entries of `frozen_prefix` are
/// held fixed and only the tail advances.
class ColoringOdometer {
public:
    ColoringOdometer(int length, int k, bool up_to_renaming, std::span<const Color> frozen_prefix = {});

    const std::vector<Color>& current() const { return colors_; }
    bool next();

private:
    int limit(int i) const;

    int k_;
    bool up_to_renaming_;
    int frozen_;
    std::vector<Color> colors_;
    std::vector<Color> running_max_;
};

/// All restricted-growth prefixes of the given length (lexicographic).
std::vector<std::vector<Color>> renaming_classes(int length, int k);

}  // namespace pc

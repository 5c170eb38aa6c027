#pragma once

#include <vector>

namespace rado {

/// An explicit assignment of color ids to the interval [1..n].
/// colors[i] is the color of the integer i+1; every id lies in
/// [0, num_colors). n = 0 denotes the empty interval, which occurs only as
/// the degenerate avoider of a forcing number of 1.
struct Coloring {
    int n = 0;
    int num_colors = 1;
    std::vector<int> colors;

    int color_of(long long value) const { return colors[static_cast<std::size_t>(value) - 1]; }

    bool operator==(const Coloring&) const = default;
};

/// Validates and builds a coloring. Throws std::invalid_argument when the
/// color list length disagrees with n or any id is out of range.
Coloring make_coloring(int n, int num_colors, std::vector<int> colors);

/// Constant coloring of [1..n] with a single color.
Coloring uniform_coloring(int n);

}  // namespace rado

#include "rado/coloring.hpp"

#include <stdexcept>

namespace rado {

Coloring make_coloring(int n, int num_colors, std::vector<int> colors) {
    if (n < 0) throw std::invalid_argument("coloring: n must be non-negative");
    if (num_colors < 1) throw std::invalid_argument("coloring: need at least one color");
    if (colors.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("coloring: color list length does not match n");
    for (int c : colors) {
        if (c < 0 || c >= num_colors)
            throw std::invalid_argument("coloring: color id out of range");
    }
    return Coloring{n, num_colors, std::move(colors)};
}

Coloring uniform_coloring(int n) {
    return make_coloring(n, 1, std::vector<int>(static_cast<std::size_t>(n), 0));
}

}  // namespace rado

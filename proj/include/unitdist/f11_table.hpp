#pragma once

namespace unitdist {

// 11x11 array of colors 0..4, indexed [u][v] for (u, v) in F_11^2. This is
// transcribed data, deliberately not derived in code; its propriety as a
// 5-coloring of the unit-distance graph on F_11^2 is checked by tests.
inline constexpr int kF11Table[11][11] = {
    {3, 1, 0, 2, 1, 2, 3, 4, 2, 0, 1},
    {1, 2, 1, 0, 4, 1, 2, 3, 4, 3, 2},
    {2, 1, 2, 3, 0, 2, 1, 2, 3, 4, 0},
    {0, 2, 3, 1, 3, 4, 0, 4, 1, 3, 4},
    {4, 0, 1, 2, 1, 3, 4, 0, 2, 1, 2},
    {3, 4, 0, 1, 2, 1, 3, 4, 1, 2, 1},
    {1, 2, 3, 4, 0, 3, 1, 0, 4, 0, 2},
    {2, 1, 4, 3, 4, 0, 2, 3, 0, 3, 4},
    {4, 2, 3, 4, 3, 4, 0, 2, 3, 4, 0},
    {0, 4, 1, 2, 1, 0, 4, 0, 2, 3, 2},
    {4, 0, 4, 1, 2, 3, 0, 3, 0, 1, 3},
};

}  // namespace unitdist

#pragma once

// Published decompositions for rank-2 types, transcribed verbatim.
// Weights are (a,b) in fundamental-weight coordinates, Bourbaki order.

#include <array>

namespace golden {

struct Entry {
  int a, b, mult;
};
struct Point {
  int a, b;
};

inline constexpr std::array<Point, 34> kB2Predicted5_2{{
    {3, 3}, {2, 5}, {1, 7}, {5, 1}, {4, 3}, {3, 5},
    {2, 7}, {1, 9}, {6, 1}, {5, 3}, {4, 5}, {3, 7},
    {2, 9}, {1, 11}, {7, 1}, {6, 3}, {5, 5}, {4, 7},
    {3, 9}, {2, 11}, {8, 1}, {7, 3}, {6, 5}, {5, 7},
    {4, 9}, {3, 11}, {9, 1}, {8, 3}, {7, 5}, {6, 7},
    {5, 9}, {9, 3}, {8, 5}, {7, 7},
}};

inline constexpr std::array<Entry, 34> kB2Product55x22{{
    {3, 3, 1}, {2, 5, 1}, {1, 7, 1}, {5, 1, 1}, {4, 3, 2}, {3, 5, 3},
    {2, 7, 2}, {1, 9, 1}, {6, 1, 2}, {5, 3, 4}, {4, 5, 4}, {3, 7, 4},
    {2, 9, 2}, {1, 11, 1}, {7, 1, 3}, {6, 3, 4}, {5, 5, 5}, {4, 7, 4},
    {3, 9, 3}, {2, 11, 1}, {8, 1, 2}, {7, 3, 4}, {6, 5, 4}, {5, 7, 4},
    {4, 9, 2}, {3, 11, 1}, {9, 1, 1}, {8, 3, 2}, {7, 5, 3}, {6, 7, 2},
    {5, 9, 1}, {9, 3, 1}, {8, 5, 1}, {7, 7, 1},
}};

inline constexpr std::array<Point, 85> kG2Predicted5_2{{
    {3, 3}, {5, 2}, {7, 1}, {0, 5}, {2, 4}, {4, 3},
    {6, 2}, {8, 1}, {10, 0}, {1, 5}, {3, 4}, {5, 3},
    {7, 2}, {9, 1}, {11, 0}, {0, 6}, {2, 5}, {4, 4},
    {6, 3}, {8, 2}, {10, 1}, {12, 0}, {1, 6}, {3, 5},
    {5, 4}, {7, 3}, {9, 2}, {11, 1}, {13, 0}, {0, 7},
    {2, 6}, {4, 5}, {6, 4}, {8, 3}, {10, 2}, {12, 1},
    {14, 0}, {1, 7}, {3, 6}, {5, 5}, {7, 4}, {9, 3},
    {11, 2}, {13, 1}, {15, 0}, {0, 8}, {2, 7}, {4, 6},
    {6, 5}, {8, 4}, {10, 3}, {12, 2}, {14, 1}, {1, 8},
    {3, 7}, {5, 6}, {7, 5}, {9, 4}, {11, 3}, {13, 2},
    {15, 1}, {0, 9}, {2, 8}, {4, 7}, {6, 6}, {8, 5},
    {10, 4}, {12, 3}, {14, 2}, {1, 9}, {3, 8}, {5, 7},
    {7, 6}, {9, 5}, {11, 4}, {13, 3}, {0, 10}, {2, 9},
    {4, 8}, {6, 7}, {8, 6}, {10, 5}, {3, 9}, {5, 8},
    {7, 7},
}};

inline constexpr std::array<Entry, 85> kG2Product55x22{{
    {3, 3, 1}, {5, 2, 1}, {7, 1, 1}, {0, 5, 1}, {2, 4, 2}, {4, 3, 3},
    {6, 2, 3}, {8, 1, 2}, {10, 0, 1}, {1, 5, 3}, {3, 4, 6}, {5, 3, 7},
    {7, 2, 6}, {9, 1, 4}, {11, 0, 2}, {0, 6, 3}, {2, 5, 8}, {4, 4, 11},
    {6, 3, 11}, {8, 2, 9}, {10, 1, 6}, {12, 0, 3}, {1, 6, 8}, {3, 5, 14},
    {5, 4, 16}, {7, 3, 15}, {9, 2, 11}, {11, 1, 7}, {13, 0, 3}, {0, 7, 5},
    {2, 6, 14}, {4, 5, 19}, {6, 4, 19}, {8, 3, 16}, {10, 2, 11}, {12, 1, 6},
    {14, 0, 2}, {1, 7, 11}, {3, 6, 18}, {5, 5, 21}, {7, 4, 19}, {9, 3, 15},
    {11, 2, 9}, {13, 1, 4}, {15, 0, 1}, {0, 8, 5}, {2, 7, 14}, {4, 6, 19},
    {6, 5, 19}, {8, 4, 16}, {10, 3, 11}, {12, 2, 6}, {14, 1, 2}, {1, 8, 8},
    {3, 7, 14}, {5, 6, 16}, {7, 5, 15}, {9, 4, 11}, {11, 3, 7}, {13, 2, 3},
    {15, 1, 1}, {0, 9, 3}, {2, 8, 8}, {4, 7, 11}, {6, 6, 11}, {8, 5, 9},
    {10, 4, 6}, {12, 3, 3}, {14, 2, 1}, {1, 9, 3}, {3, 8, 6}, {5, 7, 7},
    {7, 6, 6}, {9, 5, 4}, {11, 4, 2}, {13, 3, 1}, {0, 10, 1}, {2, 9, 2},
    {4, 8, 3}, {6, 7, 3}, {8, 6, 2}, {10, 5, 1}, {3, 9, 1}, {5, 8, 1},
    {7, 7, 1},
}};

inline constexpr std::array<Point, 112> kG2Predicted4_3{{
    {1, 1}, {3, 0}, {0, 2}, {2, 1}, {4, 0}, {1, 2},
    {3, 1}, {5, 0}, {0, 3}, {2, 2}, {4, 1}, {6, 0},
    {1, 3}, {3, 2}, {5, 1}, {7, 0}, {0, 4}, {2, 3},
    {4, 2}, {6, 1}, {8, 0}, {1, 4}, {3, 3}, {5, 2},
    {7, 1}, {9, 0}, {0, 5}, {2, 4}, {4, 3}, {6, 2},
    {8, 1}, {10, 0}, {1, 5}, {3, 4}, {5, 3}, {7, 2},
    {9, 1}, {11, 0}, {0, 6}, {2, 5}, {4, 4}, {6, 3},
    {8, 2}, {10, 1}, {12, 0}, {1, 6}, {3, 5}, {5, 4},
    {7, 3}, {9, 2}, {11, 1}, {13, 0}, {0, 7}, {2, 6},
    {4, 5}, {6, 4}, {8, 3}, {10, 2}, {12, 1}, {14, 0},
    {1, 7}, {3, 6}, {5, 5}, {7, 4}, {9, 3}, {11, 2},
    {13, 1}, {15, 0}, {0, 8}, {2, 7}, {4, 6}, {6, 5},
    {8, 4}, {10, 3}, {12, 2}, {14, 1}, {16, 0}, {1, 8},
    {3, 7}, {5, 6}, {7, 5}, {9, 4}, {11, 3}, {13, 2},
    {15, 1}, {17, 0}, {0, 9}, {2, 8}, {4, 7}, {6, 6},
    {8, 5}, {10, 4}, {12, 3}, {14, 2}, {16, 1}, {1, 9},
    {3, 8}, {5, 7}, {7, 6}, {9, 5}, {11, 4}, {13, 3},
    {0, 10}, {2, 9}, {4, 8}, {6, 7}, {8, 6}, {10, 5},
    {1, 10}, {3, 9}, {5, 8}, {7, 7},
}};

inline constexpr std::array<Entry, 112> kG2Product33x44{{
    {1, 1, 1}, {3, 0, 1}, {0, 2, 1}, {2, 1, 3}, {4, 0, 3}, {1, 2, 5},
    {3, 1, 7}, {5, 0, 6}, {0, 3, 3}, {2, 2, 10}, {4, 1, 13}, {6, 0, 9},
    {1, 3, 11}, {3, 2, 17}, {5, 1, 19}, {7, 0, 13}, {0, 4, 6}, {2, 3, 19},
    {4, 2, 27}, {6, 1, 25}, {8, 0, 16}, {1, 4, 18}, {3, 3, 29}, {5, 2, 35},
    {7, 1, 32}, {9, 0, 18}, {0, 5, 9}, {2, 4, 28}, {4, 3, 41}, {6, 2, 42},
    {8, 1, 35}, {10, 0, 20}, {1, 5, 23}, {3, 4, 38}, {5, 3, 48}, {7, 2, 48},
    {9, 1, 36}, {11, 0, 19}, {0, 6, 10}, {2, 5, 32}, {4, 4, 48}, {6, 3, 51},
    {8, 2, 47}, {10, 1, 35}, {12, 0, 17}, {1, 6, 23}, {3, 5, 38}, {5, 4, 49},
    {7, 3, 51}, {9, 2, 42}, {11, 1, 29}, {13, 0, 14}, {0, 7, 9}, {2, 6, 28},
    {4, 5, 42}, {6, 4, 45}, {8, 3, 43}, {10, 2, 35}, {12, 1, 22}, {14, 0, 10},
    {1, 7, 18}, {3, 6, 29}, {5, 5, 37}, {7, 4, 39}, {9, 3, 32}, {11, 2, 24},
    {13, 1, 15}, {15, 0, 6}, {0, 8, 6}, {2, 7, 19}, {4, 6, 28}, {6, 5, 29},
    {8, 4, 27}, {10, 3, 22}, {12, 2, 14}, {14, 1, 8}, {16, 0, 3}, {1, 8, 11},
    {3, 7, 17}, {5, 6, 21}, {7, 5, 21}, {9, 4, 16}, {11, 3, 11}, {13, 2, 7},
    {15, 1, 3}, {17, 0, 1}, {0, 9, 3}, {2, 8, 10}, {4, 7, 14}, {6, 6, 13},
    {8, 5, 11}, {10, 4, 8}, {12, 3, 4}, {14, 2, 2}, {16, 1, 1}, {1, 9, 5},
    {3, 8, 7}, {5, 7, 8}, {7, 6, 7}, {9, 5, 4}, {11, 4, 2}, {13, 3, 1},
    {0, 10, 1}, {2, 9, 3}, {4, 8, 4}, {6, 7, 3}, {8, 6, 2}, {10, 5, 1},
    {1, 10, 1}, {3, 9, 1}, {5, 8, 1}, {7, 7, 1},
}};

}  // namespace golden

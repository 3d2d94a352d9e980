#pragma once

// Hand-transcribed D4 multiplication table in ket notation.  Rows are the
// left (first-acting) factor.

#include <array>
#include <string_view>

namespace reference {

inline constexpr std::array<std::string_view, 8> kKetOrder{"1",     "ie1",   "ie2",    "ie3",
                                                           "e0+3i", "e0-3i", "ie1+2", "ie1-2"};

inline constexpr std::array<std::array<std::string_view, 8>, 8> kTable{{
    {"1", "ie1", "ie2", "ie3", "e0+3i", "e0-3i", "ie1+2", "ie1-2"},
    {"ie1", "1", "ie3", "ie2", "ie1+2", "ie1-2", "e0+3i", "e0-3i"},
    {"ie2", "ie3", "1", "ie1", "ie1-2", "ie1+2", "e0-3i", "e0+3i"},
    {"ie3", "ie2", "ie1", "1", "e0-3i", "e0+3i", "ie1-2", "ie1+2"},
    {"e0+3i", "ie1-2", "ie1+2", "e0-3i", "ie3", "1", "ie1", "ie2"},
    {"e0-3i", "ie1+2", "ie1-2", "e0+3i", "1", "ie3", "ie2", "ie1"},
    {"ie1+2", "e0-3i", "e0+3i", "ie1-2", "ie2", "ie1", "1", "ie3"},
    {"ie1-2", "e0+3i", "e0-3i", "ie1+2", "ie1", "ie2", "ie3", "1"},
}};

// Position in kKetOrder, or -1.
constexpr int ket_index(std::string_view k) {
    for (int i = 0; i < 8; ++i) {
        if (kKetOrder[i] == k) return i;
    }
    return -1;
}

}  // namespace reference

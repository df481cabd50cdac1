#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace lchoose {

/// A set of colours drawn from 0..63, one bit per colour.
using ColourSet = std::uint64_t;

inline constexpr int kMaxColours = 64;

constexpr ColourSet colour_bit(int c) { return ColourSet{1} << c; }

constexpr int colour_count(ColourSet s) { return std::popcount(s); }

constexpr bool contains(ColourSet s, int c) { return (s >> c) & 1U; }

constexpr int lowest_colour(ColourSet s) { return std::countr_zero(s); }

/// Mask with colours 0..n-1 set.
constexpr ColourSet first_colours(int n) {
    return n >= kMaxColours ? ~ColourSet{0} : colour_bit(n) - 1;
}

inline std::vector<int> colours_of(ColourSet s) {
    std::vector<int> out;
    out.reserve(colour_count(s));
    while (s != 0) {
        out.push_back(lowest_colour(s));
        s &= s - 1;
    }
    return out;
}

inline ColourSet colour_set_of(const std::vector<int>& colours) {
    ColourSet s = 0;
    for (int c : colours) s |= colour_bit(c);
    return s;
}

/// Calls fn(c) for every colour in s, ascending.
template <typename Fn>
void for_each_colour(ColourSet s, Fn&& fn) {
    while (s != 0) {
        fn(lowest_colour(s));
        s &= s - 1;
    }
}

}  // namespace lchoose

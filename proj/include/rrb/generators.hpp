#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrb/point_set.hpp"

namespace rrb {

// Portable deterministic RNG helpers (splitmix64 core). The standard
// distributions are not pinned across library implementations, so generators
// and the annealing loop draw through these.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi] by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// n reds and m blues sampled uniformly on the integer box [-box, box]^2,
// rejecting until the set is in general position. Deterministic per seed.
ColoredPointSet gen_random_gp(int n, int m, Coord box, std::uint64_t seed);

// n reds near the circle of the given radius and n blues at the same angles,
// shrunk by shrink_num/shrink_den, rounded to the grid and validated (general
// position, reds in convex position, ring separation). Retries with a doubled
// radius when rounding spoils a property.
ColoredPointSet gen_circle_pair(int n, Coord radius, std::int64_t shrink_num,
                                std::int64_t shrink_den);

// Default shrink factor 1 - 1/(1000 n).
std::pair<std::int64_t, std::int64_t> default_circle_shrink(int n);

// 2^k points by the recursive doubling construction: each level interleaves a
// copy shifted up far enough that every line through two lower points passes
// strictly below every upper point and vice versa. The shift is the exact
// minimum satisfying that separation, computed per level. Sorted by x.
std::vector<Point> gen_horton(int size_log2);

struct ColoringScheme {
    enum class Kind { alternating_by_index, random, by_x_parity } kind;
    std::uint64_t seed = 0;

    static ColoringScheme alternating() { return {Kind::alternating_by_index, 0}; }
    static ColoringScheme random(std::uint64_t seed) { return {Kind::random, seed}; }
    static ColoringScheme x_parity() { return {Kind::by_x_parity, 0}; }
    static ColoringScheme parse(const std::string& text);
    std::string name() const;
};

// Splits points into reds/blues per scheme. Alternating requires an even
// count and yields |R| = |B|.
ColoredPointSet bicolor(const std::vector<Point>& points, const ColoringScheme& scheme);

}  // namespace rrb

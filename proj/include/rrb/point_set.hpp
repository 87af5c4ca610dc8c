#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rrb/geometry.hpp"

namespace rrb {

enum class Color : std::uint8_t { red, blue };

// Red points R and blue points B, jointly in general position. Points are
// stored reds-first, so a "combined index" i < n() is red and i >= n() is
// blue; that indexing is used by the census, witness and certificate code.
class ColoredPointSet {
  public:
    ColoredPointSet() = default;

    // Validates general position (which also covers distinctness/disjointness).
    static ColoredPointSet create(std::vector<Point> reds, std::vector<Point> blues);

    // For callers that maintain validity themselves (generators, the
    // annealing loop). Invariants are the caller's responsibility.
    static ColoredPointSet create_unchecked(std::vector<Point> pts, int red_count);

    int n() const { return n_; }
    int m() const { return static_cast<int>(pts_.size()) - n_; }
    int total() const { return static_cast<int>(pts_.size()); }

    std::span<const Point> reds() const { return {pts_.data(), static_cast<std::size_t>(n_)}; }
    std::span<const Point> blues() const {
        return {pts_.data() + n_, pts_.size() - static_cast<std::size_t>(n_)};
    }
    std::span<const Point> points() const { return pts_; }

    const Point& point(int i) const { return pts_[static_cast<std::size_t>(i)]; }
    Color color(int i) const { return i < n_ ? Color::red : Color::blue; }
    int blue_index(int combined) const { return combined - n_; }

    // Same points, colors exchanged (used when the m >= n hypothesis fails).
    ColoredPointSet swapped_colors() const;

    friend bool operator==(const ColoredPointSet&, const ColoredPointSet&) = default;

  private:
    std::vector<Point> pts_;
    int n_ = 0;
};

}  // namespace rrb

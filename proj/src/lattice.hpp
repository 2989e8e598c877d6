#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace saw {

// Square lattice directions. The order N, E, S, W is the canonical
// candidate order used everywhere a set of steps is enumerated, so that
// sampling and enumeration are reproducible across platforms.
enum class Dir : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr Dir kAllDirs[4] = {Dir::N, Dir::E, Dir::S, Dir::W};

struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Unit vector of a direction.
Point dir_vector(Dir d);

// p shifted one step in direction d.
Point step(Point p, Dir d);

Dir reverse_dir(Dir d);

// Rotate a direction counterclockwise by `quarters` quarter turns.
Dir rotate_dir(Dir d, int quarters);

char dir_char(Dir d);
std::optional<Dir> dir_from_char(char c);

// Signed turn from heading `a` to heading `b`: +1 for a left (counter-
// clockwise) turn, -1 for a right turn, 0 for straight ahead or a U-turn.
// This is the z component of the cross product of the two unit vectors.
int turn_sign(Dir a, Dir b);

std::string steps_to_string(const std::vector<Dir>& steps);
std::vector<Dir> steps_from_string(const std::string& s);  // throws std::invalid_argument

// A nearest-neighbour walk, stored as a start vertex plus a step list.
struct Walk {
    Point start{0, 0};
    std::vector<Dir> steps;

    std::size_t size() const { return steps.size(); }
    Point end() const;
    // All visited vertices in order, size() + 1 of them.
    std::vector<Point> vertices() const;
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        // Pack both coordinates into one word; walks here stay far below
        // the 2^32 coordinate range.
        std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                          static_cast<std::uint32_t>(p.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

using PointSet = std::unordered_set<Point, PointHash>;

bool is_self_avoiding(const Walk& w);

// Winding of the walk tail starting at vertex index `from_index`, in
// quarter turns. A virtual half-edge heading W is prepended at that
// vertex, and the value is (#left turns - #right turns) accumulated
// over the heading sequence [W, steps[from_index..]], a U-turn
// contributing 0.
//
// Throws std::out_of_range if from_index > w.size().
int winding_number(const Walk& w, std::size_t from_index);

// Dense occupancy grid over [0,w) x [0,h), used by the confined models
// where bounds are known up front (hash sets are for unbounded walks).
class Grid {
  public:
    Grid(int w, int h) : w_(w), h_(h), cells_(static_cast<std::size_t>(w) * h, 0) {}

    bool contains(Point p) const { return p.x >= 0 && p.x < w_ && p.y >= 0 && p.y < h_; }
    bool test(Point p) const { return cells_[index(p)] != 0; }
    void set(Point p) { cells_[index(p)] = 1; }
    void clear(Point p) { cells_[index(p)] = 0; }
    int width() const { return w_; }
    int height() const { return h_; }

  private:
    std::size_t index(Point p) const {
        return static_cast<std::size_t>(p.y) * w_ + p.x;
    }
    int w_ = 0;
    int h_ = 0;
    std::vector<std::uint8_t> cells_;
};

// SVG rendering ------------------------------------------------------

struct RenderOptions {
    int cell = 24;           // lattice spacing in pixels
    double stroke = 2.0;     // base stroke width
    int columns = 0;         // grid columns for multi-walk layout, 0 = auto
    bool highlight_forced = true;  // draw probability-1 steps thicker
    int box_side = -1;       // when >= 0, draw the bounding square [0,side]^2
};

// Render one walk per panel, arranged on a grid. per_step_sizes, when
// non-empty, holds for each walk the number of choices that were
// available at each step; steps with exactly one choice are highlighted.
std::string render_svg(const std::vector<Walk>& walks,
                       const std::vector<std::vector<std::uint8_t>>& per_step_sizes,
                       const RenderOptions& opt);

}  // namespace saw

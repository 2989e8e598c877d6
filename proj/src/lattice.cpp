#include "lattice.hpp"

#include <stdexcept>

namespace saw {

Point dir_vector(Dir d) {
    switch (d) {
        case Dir::N: return {0, 1};
        case Dir::E: return {1, 0};
        case Dir::S: return {0, -1};
        case Dir::W: return {-1, 0};
    }
    return {0, 0};
}

Point step(Point p, Dir d) {
    Point v = dir_vector(d);
    return {p.x + v.x, p.y + v.y};
}

Dir reverse_dir(Dir d) {
    return static_cast<Dir>((static_cast<int>(d) + 2) % 4);
}

Dir rotate_dir(Dir d, int quarters) {
    // In the N, E, S, W encoding a counterclockwise quarter turn maps
    // N -> W -> S -> E -> N, i.e. index + 3 mod 4 per turn.
    int q = ((quarters % 4) + 4) % 4;
    return static_cast<Dir>((static_cast<int>(d) + 3 * q) % 4);
}

char dir_char(Dir d) {
    switch (d) {
        case Dir::N: return 'N';
        case Dir::E: return 'E';
        case Dir::S: return 'S';
        case Dir::W: return 'W';
    }
    return '?';
}

std::optional<Dir> dir_from_char(char c) {
    switch (c) {
        case 'N': case 'n': return Dir::N;
        case 'E': case 'e': return Dir::E;
        case 'S': case 's': return Dir::S;
        case 'W': case 'w': return Dir::W;
        default: return std::nullopt;
    }
}

int turn_sign(Dir a, Dir b) {
    Point u = dir_vector(a);
    Point v = dir_vector(b);
    return u.x * v.y - u.y * v.x;
}

std::string steps_to_string(const std::vector<Dir>& steps) {
    std::string s;
    s.reserve(steps.size());
    for (Dir d : steps) s.push_back(dir_char(d));
    return s;
}

std::vector<Dir> steps_from_string(const std::string& s) {
    std::vector<Dir> steps;
    steps.reserve(s.size());
    for (char c : s) {
        auto d = dir_from_char(c);
        if (!d) throw std::invalid_argument(std::string("invalid step character '") + c + "'");
        steps.push_back(*d);
    }
    return steps;
}

Point Walk::end() const {
    Point p = start;
    for (Dir d : steps) p = step(p, d);
    return p;
}

std::vector<Point> Walk::vertices() const {
    std::vector<Point> v;
    v.reserve(steps.size() + 1);
    Point p = start;
    v.push_back(p);
    for (Dir d : steps) {
        p = step(p, d);
        v.push_back(p);
    }
    return v;
}

bool is_self_avoiding(const Walk& w) {
    PointSet seen;
    seen.reserve(w.steps.size() + 1);
    Point p = w.start;
    seen.insert(p);
    for (Dir d : w.steps) {
        p = step(p, d);
        if (!seen.insert(p).second) return false;
    }
    return true;
}

int winding_number(const Walk& w, std::size_t from_index) {
    if (from_index > w.size()) throw std::out_of_range("winding_number: from_index out of range");
    // The incoming heading at the starting vertex is W by convention (a
    // virtual half-edge pointing from the east), whatever from_index is.
    Dir heading = Dir::W;
    int total = 0;
    for (std::size_t i = from_index; i < w.steps.size(); ++i) {
        total += turn_sign(heading, w.steps[i]);
        heading = w.steps[i];
    }
    return total;
}

}  // namespace saw

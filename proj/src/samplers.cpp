#include "samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace saw {

const char* model_name(Model m) {
    switch (m) {
        case Model::crossing: return "crossing";
        case Model::directed: return "directed";
        case Model::nes: return "nes";
        case Model::untrapped: return "untrapped";
    }
    return "?";
}

std::optional<Model> model_from_string(const std::string& s) {
    if (s == "crossing") return Model::crossing;
    if (s == "directed") return Model::directed;
    if (s == "nes") return Model::nes;
    if (s == "untrapped") return Model::untrapped;
    return std::nullopt;
}

void ProbTrace::record(unsigned n_eligible) {
    if (n_eligible < 1 || n_eligible > 4)
        throw std::logic_error("ProbTrace::record: eligible-set size out of range");
    per_step.push_back(static_cast<std::uint8_t>(n_eligible));
    if (n_eligible == 2) a += 1;
    else if (n_eligible == 3) b += 1;
    else if (n_eligible == 4) a += 2;
}

BigInt ProbTrace::inv_p() const {
    return int_pow(2, static_cast<unsigned>(a)) * int_pow(3, static_cast<unsigned>(b));
}

double ProbTrace::log10_inv_p() const {
    static const double l2 = std::log10(2.0), l3 = std::log10(3.0);
    return static_cast<double>(a) * l2 + static_cast<double>(b) * l3;
}

// Crossing model ------------------------------------------------------

namespace {

// Can `from` reach (k,k) through vertices not marked in occ? `from`
// itself may be marked; it is the flood source.
bool can_reach_corner(const Grid& occ, Point from, int k) {
    const Point goal{k, k};
    if (from == goal) return true;
    const int side = k + 1;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(side) * side, 0);
    std::vector<Point> stack;
    auto at = [side](Point p) { return static_cast<std::size_t>(p.y) * side + p.x; };
    seen[at(from)] = 1;
    stack.push_back(from);
    while (!stack.empty()) {
        Point p = stack.back();
        stack.pop_back();
        for (Dir d : kAllDirs) {
            Point q = step(p, d);
            if (q.x < 0 || q.x > k || q.y < 0 || q.y > k) continue;
            if (seen[at(q)] || occ.test(q)) continue;
            if (q == goal) return true;
            seen[at(q)] = 1;
            stack.push_back(q);
        }
    }
    return false;
}

}  // namespace

int eligible_crossing_steps(const Grid& occupied, Point head, int k, Dir out[4]) {
    int n = 0;
    for (Dir d : kAllDirs) {
        Point nh = step(head, d);
        if (nh.x < 0 || nh.x > k || nh.y < 0 || nh.y > k) continue;
        if (occupied.test(nh)) continue;
        if (!can_reach_corner(occupied, nh, k)) continue;
        out[n++] = d;
    }
    return n;
}

std::vector<Dir> eligible_steps_crossing(const Walk& w, int k) {
    if (k < 1) throw std::invalid_argument("eligible_steps_crossing: k must be >= 1");
    if (!(w.start == Point{0, 0}))
        throw std::invalid_argument("eligible_steps_crossing: walk must start at (0,0)");
    Grid occ(k + 1, k + 1);
    Point p = w.start;
    occ.set(p);
    for (Dir d : w.steps) {
        p = step(p, d);
        if (!occ.contains(p))
            throw std::invalid_argument("eligible_steps_crossing: walk leaves the square");
        if (occ.test(p))
            throw std::invalid_argument("eligible_steps_crossing: walk is not self-avoiding");
        occ.set(p);
    }
    Dir buf[4];
    int n = eligible_crossing_steps(occ, p, k, buf);
    return std::vector<Dir>(buf, buf + n);
}

Sample sample_crossing_saw(int k, RandomStream& rng) {
    if (k < 1) throw std::invalid_argument("sample_crossing_saw: k must be >= 1");
    Sample s;
    s.model = Model::crossing;
    s.walk.start = {0, 0};
    Grid occ(k + 1, k + 1);
    Point head{0, 0};
    occ.set(head);
    const Point goal{k, k};
    Dir buf[4];
    while (!(head == goal)) {
        int n = eligible_crossing_steps(occ, head, k, buf);
        // The flood-fill test guarantees n >= 1: the current head was
        // itself reachable-from when it was chosen.
        Dir d = buf[rng.uniform_below(static_cast<std::uint32_t>(n))];
        s.trace.record(static_cast<unsigned>(n));
        s.walk.steps.push_back(d);
        head = step(head, d);
        occ.set(head);
    }
    return s;
}

// Directed model -------------------------------------------------------

namespace {

int eligible_directed_steps(Point head, int k, Dir out[2]) {
    int n = 0;
    if (head.y < k) out[n++] = Dir::N;
    if (head.x < k) out[n++] = Dir::E;
    return n;
}

}  // namespace

Sample sample_directed(int k, RandomStream& rng) {
    if (k < 1) throw std::invalid_argument("sample_directed: k must be >= 1");
    Sample s;
    s.model = Model::directed;
    s.walk.start = {0, 0};
    Point head{0, 0};
    const Point goal{k, k};
    Dir buf[2];
    while (!(head == goal)) {
        int n = eligible_directed_steps(head, k, buf);
        Dir d = buf[rng.uniform_below(static_cast<std::uint32_t>(n))];
        s.trace.record(static_cast<unsigned>(n));
        s.walk.steps.push_back(d);
        head = step(head, d);
    }
    return s;
}

// NES model ------------------------------------------------------------

namespace {

// last == -1 encodes "no previous step". Candidates in N, E, S order.
int eligible_nes_steps(Point head, int last, int k, int l, Dir out[3]) {
    if (head.x == l) {
        out[0] = Dir::N;
        return 1;
    }
    int n = 0;
    if (head.y < k && last != static_cast<int>(Dir::S)) out[n++] = Dir::N;
    out[n++] = Dir::E;
    if (head.y > 0 && last != static_cast<int>(Dir::N)) out[n++] = Dir::S;
    return n;
}

}  // namespace

Sample sample_nes(int k, int l, RandomStream& rng) {
    if (k < 1 || l < 1) throw std::invalid_argument("sample_nes: k and l must be >= 1");
    Sample s;
    s.model = Model::nes;
    s.walk.start = {0, 0};
    Point head{0, 0};
    const Point goal{l, k};
    int last = -1;
    Dir buf[3];
    while (!(head == goal)) {
        int n = eligible_nes_steps(head, last, k, l, buf);
        Dir d = buf[rng.uniform_below(static_cast<std::uint32_t>(n))];
        s.trace.record(static_cast<unsigned>(n));
        s.walk.steps.push_back(d);
        head = step(head, d);
        last = static_cast<int>(d);
    }
    return s;
}

std::pair<NesStats, BigInt> nes_walk_stats(const Walk& w, int k) {
    if (k < 1) throw std::invalid_argument("nes_walk_stats: k must be >= 1");
    if (!(w.start == Point{0, 0}))
        throw std::invalid_argument("nes_walk_stats: walk must start at (0,0)");
    if (w.steps.empty()) throw std::invalid_argument("nes_walk_stats: empty walk");

    int y = 0;
    int last_e = -1;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        Dir d = w.steps[i];
        if (d == Dir::W) throw std::invalid_argument("nes_walk_stats: W step in a NES walk");
        if (i > 0) {
            Dir prev = w.steps[i - 1];
            if ((d == Dir::N && prev == Dir::S) || (d == Dir::S && prev == Dir::N))
                throw std::invalid_argument("nes_walk_stats: vertical run reversal");
        }
        if (d == Dir::E) {
            last_e = static_cast<int>(i);
        } else {
            y += d == Dir::N ? 1 : -1;
            if (y < 0 || y > k)
                throw std::invalid_argument("nes_walk_stats: walk leaves the strip");
        }
    }
    if (last_e < 0) throw std::invalid_argument("nes_walk_stats: no E step");
    if (y != k)
        throw std::invalid_argument("nes_walk_stats: walk does not end on the top side");

    // Contact counts over the prefix before the last E step. Everything
    // from that step on is forced and contributes probability 1.
    NesStats st;
    y = 0;
    for (int i = 0; i < last_e; ++i) {
        Dir d = w.steps[i];
        if (d == Dir::E) {
            if (y == 0 || y == k) ++st.h_c; else ++st.h;
        } else {
            y += d == Dir::N ? 1 : -1;
            if (y == 0 || y == k) ++st.v_c; else ++st.v;
        }
    }
    BigInt invp = BigInt(2) * int_pow(2, static_cast<unsigned>(st.h_c + st.v)) *
                  int_pow(3, static_cast<unsigned>(st.h));
    return {st, invp};
}

// Untrapped model --------------------------------------------------------

namespace {

Dir reflect_h(Dir d) {
    if (d == Dir::E) return Dir::W;
    if (d == Dir::W) return Dir::E;
    return d;
}

int rotation_to_west(Dir d) {
    for (int q = 0; q < 4; ++q)
        if (rotate_dir(d, q) == Dir::W) return q;
    return 0;
}

using VertexIndex = std::unordered_map<Point, std::size_t, PointHash>;

// Builds the vertex->index map, throwing if the walk revisits a vertex.
VertexIndex index_vertices(const Walk& w, const char* who) {
    VertexIndex index;
    index.reserve(w.size() + 2);
    Point p = w.start;
    std::size_t i = 0;
    index.emplace(p, i);
    for (Dir d : w.steps) {
        p = step(p, d);
        ++i;
        if (!index.emplace(p, i).second)
            throw std::invalid_argument(std::string(who) + ": walk is not self-avoiding");
    }
    return index;
}

}  // namespace

bool is_trapping_step(const Walk& w, Dir d) {
    VertexIndex index = index_vertices(w, "is_trapping_step");
    Point head = w.end();
    if (index.count(step(head, d)))
        throw std::invalid_argument("is_trapping_step: appended step revisits a vertex");
    if (w.steps.empty()) return false;

    // Work in the two frames that map the last step to W: the unique
    // rotation, and a horizontal reflection followed by its unique
    // rotation. A new step can only close off a region against the
    // last edge, so these frames cover all orientations of the three
    // trapping configurations.
    for (int refl = 0; refl < 2; ++refl) {
        Dir tlast = refl ? reflect_h(w.steps.back()) : w.steps.back();
        const int q = rotation_to_west(tlast);
        auto tf = [&](Dir s) { return rotate_dir(refl ? reflect_h(s) : s, q); };

        Walk tw;
        tw.start = {0, 0};
        tw.steps.reserve(w.steps.size());
        for (Dir s : w.steps) tw.steps.push_back(tf(s));
        const Dir td = tf(d);

        VertexIndex tindex = index_vertices(tw, "is_trapping_step");
        const Point thead = tw.end();

        auto winding_hits = [&](Point v, int target) {
            auto it = tindex.find(v);
            return it != tindex.end() && winding_number(tw, it->second) == target;
        };

        // With the last step pointing W and head (i,j):
        //   (1) d=N and the walk passes through (i-1, j)   with winding -4
        //   (2) d=N and the walk passes through (i-1, j+1) with winding -4
        //   (3) d in {W,S} and it passes through (i-1, j+1) with winding +4
        if (td == Dir::N) {
            if (winding_hits({thead.x - 1, thead.y}, -4)) return true;
            if (winding_hits({thead.x - 1, thead.y + 1}, -4)) return true;
        } else if (td == Dir::W || td == Dir::S) {
            if (winding_hits({thead.x - 1, thead.y + 1}, +4)) return true;
        }
    }
    return false;
}

bool is_trapping_step_oracle(const Walk& w, Dir d) {
    PointSet visited;
    visited.reserve(w.size() + 2);
    int minx = w.start.x, maxx = w.start.x, miny = w.start.y, maxy = w.start.y;
    Point p = w.start;
    visited.insert(p);
    for (Dir s : w.steps) {
        p = step(p, s);
        if (!visited.insert(p).second)
            throw std::invalid_argument("is_trapping_step_oracle: walk is not self-avoiding");
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }
    Point nh = step(p, d);
    if (visited.count(nh))
        throw std::invalid_argument("is_trapping_step_oracle: appended step revisits a vertex");
    visited.insert(nh);
    minx = std::min(minx, nh.x); maxx = std::max(maxx, nh.x);
    miny = std::min(miny, nh.y); maxy = std::max(maxy, nh.y);

    // The unvisited component of the new head is infinite iff it leaves
    // the walk's bounding box (then it can run around the outside).
    PointSet seen;
    std::vector<Point> stack;
    stack.push_back(nh);
    seen.insert(nh);
    while (!stack.empty()) {
        Point c = stack.back();
        stack.pop_back();
        for (Dir s : kAllDirs) {
            Point q = step(c, s);
            if (visited.count(q) || seen.count(q)) continue;
            if (q.x < minx || q.x > maxx || q.y < miny || q.y > maxy) return false;
            seen.insert(q);
            stack.push_back(q);
        }
    }
    return true;
}

Sample sample_untrapped(int n, RandomStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_untrapped: n must be >= 1");
    Sample s;
    s.model = Model::untrapped;
    s.walk.start = {0, 0};
    PointSet visited;
    visited.reserve(static_cast<std::size_t>(n) + 1);
    Point head{0, 0};
    visited.insert(head);
    Dir buf[4];
    for (int i = 0; i < n; ++i) {
        int cnt = 0;
        for (Dir d : kAllDirs) {
            if (visited.count(step(head, d))) continue;
            if (is_trapping_step(s.walk, d)) continue;
            buf[cnt++] = d;
        }
        // An untrapped walk always has at least one eligible extension.
        Dir d = buf[rng.uniform_below(static_cast<std::uint32_t>(cnt))];
        s.trace.record(static_cast<unsigned>(cnt));
        s.walk.steps.push_back(d);
        head = step(head, d);
        visited.insert(head);
    }
    return s;
}

// Trace replay -----------------------------------------------------------

ProbTrace recompute_trace(Model model, int k, int l, const Walk& w) {
    ProbTrace trace;
    if (!(w.start == Point{0, 0}))
        throw std::invalid_argument("recompute_trace: walk must start at (0,0)");

    switch (model) {
        case Model::crossing: {
            if (k < 1) throw std::invalid_argument("recompute_trace: k must be >= 1");
            Grid occ(k + 1, k + 1);
            Point head{0, 0};
            occ.set(head);
            Dir buf[4];
            for (Dir d : w.steps) {
                int n = eligible_crossing_steps(occ, head, k, buf);
                if (std::find(buf, buf + n, d) == buf + n)
                    throw std::invalid_argument("recompute_trace: ineligible crossing step");
                trace.record(static_cast<unsigned>(n));
                head = step(head, d);
                occ.set(head);
            }
            if (!(head == Point{k, k}))
                throw std::invalid_argument("recompute_trace: walk does not reach the corner");
            return trace;
        }
        case Model::directed: {
            if (k < 1) throw std::invalid_argument("recompute_trace: k must be >= 1");
            Point head{0, 0};
            Dir buf[2];
            for (Dir d : w.steps) {
                int n = eligible_directed_steps(head, k, buf);
                if (std::find(buf, buf + n, d) == buf + n)
                    throw std::invalid_argument("recompute_trace: ineligible directed step");
                trace.record(static_cast<unsigned>(n));
                head = step(head, d);
            }
            if (!(head == Point{k, k}))
                throw std::invalid_argument("recompute_trace: walk does not reach the corner");
            return trace;
        }
        case Model::nes: {
            if (k < 1 || l < 1)
                throw std::invalid_argument("recompute_trace: k and l must be >= 1");
            Point head{0, 0};
            int last = -1;
            Dir buf[3];
            for (Dir d : w.steps) {
                int n = eligible_nes_steps(head, last, k, l, buf);
                if (std::find(buf, buf + n, d) == buf + n)
                    throw std::invalid_argument("recompute_trace: ineligible NES step");
                trace.record(static_cast<unsigned>(n));
                head = step(head, d);
                last = static_cast<int>(d);
            }
            if (!(head == Point{l, k}))
                throw std::invalid_argument("recompute_trace: walk does not reach the top corner");
            return trace;
        }
        case Model::untrapped: {
            Walk prefix;
            prefix.start = w.start;
            PointSet visited;
            visited.insert(w.start);
            Point head = w.start;
            Dir buf[4];
            for (Dir d : w.steps) {
                int cnt = 0;
                for (Dir c : kAllDirs) {
                    if (visited.count(step(head, c))) continue;
                    if (is_trapping_step(prefix, c)) continue;
                    buf[cnt++] = c;
                }
                if (std::find(buf, buf + cnt, d) == buf + cnt)
                    throw std::invalid_argument("recompute_trace: ineligible untrapped step");
                trace.record(static_cast<unsigned>(cnt));
                prefix.steps.push_back(d);
                head = step(head, d);
                visited.insert(head);
            }
            return trace;
        }
    }
    throw std::invalid_argument("recompute_trace: unknown model");
}

}  // namespace saw

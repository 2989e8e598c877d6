#include "exact_enum.hpp"

#include "genfunc.hpp"
#include "samplers.hpp"

namespace saw {

namespace {

struct CrossingDfs {
    int k;
    bool weighted;
    std::vector<Sample>* collect = nullptr;

    Grid occ;
    std::vector<Dir> path;
    std::vector<std::uint8_t> sizes;
    std::uint64_t a = 0, b = 0;

    BigInt count = 0, ws = 0, ws2 = 0;

    explicit CrossingDfs(int k_, bool weighted_)
        : k(k_), weighted(weighted_), occ(k_ + 1, k_ + 1) {}

    void leaf() {
        ++count;
        if (weighted) {
            BigInt w = int_pow(2, static_cast<unsigned>(a)) * int_pow(3, static_cast<unsigned>(b));
            ws += w;
            ws2 += w * w;
        }
        if (collect) {
            Sample s;
            s.model = Model::crossing;
            s.walk.start = {0, 0};
            s.walk.steps = path;
            for (std::uint8_t n : sizes) s.trace.record(n);
            collect->push_back(std::move(s));
        }
    }

    void run(Point head) {
        if (head == Point{k, k}) {
            leaf();
            return;
        }
        Dir buf[4];
        int n = eligible_crossing_steps(occ, head, k, buf);
        for (int i = 0; i < n; ++i) {
            Dir d = buf[i];
            Point nh = step(head, d);
            occ.set(nh);
            path.push_back(d);
            sizes.push_back(static_cast<std::uint8_t>(n));
            if (n == 2) ++a; else if (n == 3) ++b;
            run(nh);
            if (n == 2) --a; else if (n == 3) --b;
            sizes.pop_back();
            path.pop_back();
            occ.clear(nh);
        }
    }
};

}  // namespace

EnumReport enumerate_crossing(int k, const EnumLimits& limits) {
    if (k < 1) throw std::invalid_argument("enumerate_crossing: k must be >= 1");
    if (k > limits.crossing_count_k)
        throw LimitExceeded("enumerate_crossing: k exceeds the crossing-count limit");
    const bool weighted = k <= limits.crossing_weight_k;
    CrossingDfs dfs(k, weighted);
    dfs.occ.set({0, 0});
    dfs.run({0, 0});
    EnumReport r;
    r.model = Model::crossing;
    r.k = r.l = k;
    r.count = dfs.count;
    if (weighted) {
        r.weighted_sum = dfs.ws;
        r.weighted_sq_sum = dfs.ws2;
    }
    return r;
}

std::vector<Sample> crossing_support(int k, const EnumLimits& limits) {
    if (k < 1) throw std::invalid_argument("crossing_support: k must be >= 1");
    if (k > limits.crossing_weight_k)
        throw LimitExceeded("crossing_support: k exceeds the weighted crossing limit");
    std::vector<Sample> out;
    CrossingDfs dfs(k, false);
    dfs.collect = &out;
    dfs.occ.set({0, 0});
    dfs.run({0, 0});
    return out;
}

namespace {

struct DirectedDfs {
    int k;
    std::uint64_t a = 0;
    BigInt count = 0, ws = 0, ws2 = 0;

    void run(Point head) {
        if (head == Point{k, k}) {
            ++count;
            BigInt w = int_pow(2, static_cast<unsigned>(a));
            ws += w;
            ws2 += w * w;
            return;
        }
        int n = 0;
        Dir buf[2];
        if (head.y < k) buf[n++] = Dir::N;
        if (head.x < k) buf[n++] = Dir::E;
        for (int i = 0; i < n; ++i) {
            if (n == 2) ++a;
            run(step(head, buf[i]));
            if (n == 2) --a;
        }
    }
};

}  // namespace

EnumReport enumerate_directed(int k, const EnumLimits& limits) {
    if (k < 1) throw std::invalid_argument("enumerate_directed: k must be >= 1");
    if (k > limits.directed_k)
        throw LimitExceeded("enumerate_directed: k exceeds the exhaustive directed limit");
    DirectedDfs dfs{k};
    dfs.run({0, 0});
    if (dfs.count != directed_first_moment(k))
        throw std::logic_error("enumerate_directed: count disagrees with binom(2k,k)");
    if (dfs.ws != directed_second_moment(k))
        throw std::logic_error("enumerate_directed: weighted sum disagrees with the closed sum");
    EnumReport r;
    r.model = Model::directed;
    r.k = r.l = k;
    r.count = dfs.count;
    r.weighted_sum = dfs.ws;
    r.weighted_sq_sum = dfs.ws2;
    return r;
}

EnumReport enumerate_nes(int k, int l, const EnumLimits& limits) {
    if (k < 1 || l < 1) throw std::invalid_argument("enumerate_nes: k and l must be >= 1");
    const BigInt states = int_pow(BigInt(k + 1), static_cast<unsigned>(l));
    if (states > limits.nes_states)
        throw LimitExceeded("enumerate_nes: (k+1)^l exceeds the state limit");

    BigInt count = 0, ws = 0, ws2 = 0;
    std::vector<int> h(static_cast<std::size_t>(l), 0);
    Walk w;
    w.start = {0, 0};
    for (;;) {
        w.steps.clear();
        int y = 0;
        for (int i = 0; i < l; ++i) {
            for (; y < h[i]; ++y) w.steps.push_back(Dir::N);
            for (; y > h[i]; --y) w.steps.push_back(Dir::S);
            w.steps.push_back(Dir::E);
        }
        for (; y < k; ++y) w.steps.push_back(Dir::N);

        BigInt invp = nes_walk_stats(w, k).second;
        ++count;
        ws += invp;
        ws2 += invp * invp;

        int i = 0;
        while (i < l && ++h[i] > k) h[i++] = 0;
        if (i == l) break;
    }
    if (count != states) throw std::logic_error("enumerate_nes: height enumeration miscount");

    EnumReport r;
    r.model = Model::nes;
    r.k = k;
    r.l = l;
    r.count = count;
    r.weighted_sum = ws;
    r.weighted_sq_sum = ws2;
    return r;
}

}  // namespace saw

#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here counts by direct enumeration of the defining tuples, so a
// disagreement with the library's convolution/spectral paths indicts the
// library, not the oracle.

#include <vector>

#include "quasimix/int128.hpp"
#include "quasimix/semidirect.hpp"
#include "quasimix/subset.hpp"

namespace quasimix::oracle {

// #{(x0, x1, ..., xk) : x1 x2 ... xk = x0}
inline int128 brute_Mk(const std::vector<GroupSubset>& sets) {
    const SdpGroup& g = sets.front().group();
    std::vector<std::vector<int>> idx;
    for (size_t i = 1; i < sets.size(); ++i) idx.push_back(sets[i].indices());
    int128 count = 0;
    std::vector<size_t> pos(idx.size(), 0);
    for (const auto& v : idx)
        if (v.empty()) return 0;
    while (true) {
        int prod = g.identity();
        for (size_t i = 0; i < idx.size(); ++i) prod = g.mul(prod, idx[i][pos[i]]);
        if (sets[0].contains(prod)) ++count;
        size_t level = idx.size();
        while (level > 0) {
            --level;
            if (++pos[level] < idx[level].size()) break;
            pos[level] = 0;
            if (level == 0) return count;
        }
    }
}

// #{(x0, ..., xk) : dot(x1) ... dot(xk) = dot(x0)}
inline int128 brute_Mk_dot(const std::vector<GroupSubset>& sets) {
    const SdpGroup& g = sets.front().group();
    std::vector<std::vector<int>> idx;
    for (size_t i = 1; i < sets.size(); ++i) idx.push_back(sets[i].indices());
    for (const auto& v : idx)
        if (v.empty()) return 0;
    std::vector<int> x0_dots;
    for (int x : sets[0].indices()) x0_dots.push_back(g.dot(x));
    int128 count = 0;
    std::vector<size_t> pos(idx.size(), 0);
    while (true) {
        int dot = g.h_group().identity;
        for (size_t i = 0; i < idx.size(); ++i) dot = g.h_mul(dot, g.dot(idx[i][pos[i]]));
        for (int d0 : x0_dots)
            if (d0 == dot) ++count;
        size_t level = idx.size();
        while (level > 0) {
            --level;
            if (++pos[level] < idx[level].size()) break;
            pos[level] = 0;
            if (level == 0) return count;
        }
    }
}

// #{(x1..xk, y1..yk) : dot-products equal}
inline int128 brute_Nk_dot(const std::vector<GroupSubset>& sets) {
    const SdpGroup& g = sets.front().group();
    // enumerate the dot-product value of every tuple, then sum squared
    // multiplicities the slow way: two independent odometers
    std::vector<std::vector<int>> idx;
    for (const auto& s : sets) idx.push_back(s.indices());
    for (const auto& v : idx)
        if (v.empty()) return 0;
    std::vector<int> dots;
    std::vector<size_t> pos(idx.size(), 0);
    while (true) {
        int dot = g.h_group().identity;
        for (size_t i = 0; i < idx.size(); ++i) dot = g.h_mul(dot, g.dot(idx[i][pos[i]]));
        dots.push_back(dot);
        size_t level = idx.size();
        bool done = true;
        while (level > 0) {
            --level;
            if (++pos[level] < idx[level].size()) {
                done = false;
                break;
            }
            pos[level] = 0;
        }
        if (done) break;
    }
    int128 count = 0;
    for (int a : dots)
        for (int b : dots)
            if (a == b) ++count;
    return count;
}

// #{(x1, x2, y1, y2) in X^2 x Y^2 : x1 y1 = x2 y2}
inline int128 brute_energy(const GroupSubset& x, const GroupSubset& y) {
    const SdpGroup& g = x.group();
    int128 count = 0;
    const auto xs = x.indices();
    const auto ys = y.indices();
    for (int x1 : xs)
        for (int x2 : xs)
            for (int y1 : ys)
                for (int y2 : ys)
                    if (g.mul(x1, y1) == g.mul(x2, y2)) ++count;
    return count;
}

inline int128 brute_energy_dot(const GroupSubset& x, const GroupSubset& y) {
    const SdpGroup& g = x.group();
    int128 count = 0;
    const auto xs = x.indices();
    const auto ys = y.indices();
    for (int x1 : xs)
        for (int x2 : xs)
            for (int y1 : ys)
                for (int y2 : ys)
                    if (g.h_mul(g.dot(x1), g.dot(y1)) == g.h_mul(g.dot(x2), g.dot(y2))) ++count;
    return count;
}

inline GroupSubset brute_product_set(const std::vector<GroupSubset>& sets) {
    const SdpGroup& g = sets.front().group();
    GroupSubset acc = sets[0];
    for (size_t i = 1; i < sets.size(); ++i) {
        GroupSubset next(g);
        for (int a : acc.indices())
            for (int b : sets[i].indices()) next.add(g.mul(a, b));
        acc = next;
    }
    return acc;
}

// Partition by the definition: x ~ y iff some c conjugates x to y.
inline std::vector<std::vector<int>> brute_conjugacy_partition(const SdpGroup& g) {
    std::vector<int> cls_of(g.size(), -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g.size(); ++x) {
        if (cls_of[x] >= 0) continue;
        std::vector<int> cls;
        for (int y = x; y < g.size(); ++y) {
            if (cls_of[y] >= 0) continue;
            bool conjugate = false;
            for (int c = 0; c < g.size() && !conjugate; ++c)
                conjugate = g.mul(g.mul(c, x), g.inv(c)) == y;
            if (conjugate) {
                cls_of[y] = static_cast<int>(classes.size());
                cls.push_back(y);
            }
        }
        classes.push_back(cls);
    }
    return classes;
}

} // namespace quasimix::oracle

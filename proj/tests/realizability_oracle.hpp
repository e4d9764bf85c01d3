#pragma once

// Naive realizability oracle: full 2^n scan, no pre-filter, no early exit,
// with its own dart bookkeeping (rotation lists searched per step).

#include <utility>
#include <vector>

#include "knots/notation.hpp"

namespace testutil {

using knots::Notation;

struct NaiveRealizability {
    bool realizable = false;
    std::vector<uint32_t> witnesses; // every assignment reaching F = n+2
};

// Slot at a crossing: (label, side). side 0 = toward arc label-1, 1 = toward arc label.
using Slot = std::pair<int, int>;
// Dart: (arc, dir). dir 0 = forward along the traversal.
using Dart = std::pair<int, int>;

inline NaiveRealizability naive_realizable(const Notation& v) {
    NaiveRealizability out;
    const int n = v.n();
    if (n == 0) {
        out.realizable = true;
        out.witnesses.push_back(0);
        return out;
    }
    const int arcs = 2 * n;
    auto prev_arc = [&](int label) { return label == 1 ? arcs : label - 1; };
    auto arrival = [&](const Dart& d) -> Slot {
        return d.second == 0 ? Slot{d.first % arcs + 1, 0} : Slot{d.first, 1};
    };
    auto departing = [&](const Slot& s) -> Dart {
        return s.second == 0 ? Dart{prev_arc(s.first), 1} : Dart{s.first, 0};
    };
    for (uint32_t bits = 0; bits < (uint32_t{1} << n); ++bits) {
        std::vector<std::vector<Slot>> rot(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) {
            int a = v.pairs()[static_cast<size_t>(c)].over;
            int b = v.pairs()[static_cast<size_t>(c)].under;
            if ((bits >> c) & 1)
                rot[static_cast<size_t>(c)] = {{a, 0}, {b, 1}, {a, 1}, {b, 0}};
            else
                rot[static_cast<size_t>(c)] = {{a, 0}, {b, 0}, {a, 1}, {b, 1}};
        }
        auto successor = [&](const Dart& d) -> Dart {
            Slot s = arrival(d);
            int c = v.crossing_of(s.first);
            const auto& r = rot[static_cast<size_t>(c)];
            for (int i = 0; i < 4; ++i)
                if (r[static_cast<size_t>(i)] == s)
                    return departing(r[static_cast<size_t>((i + 1) % 4)]);
            return {-1, -1};
        };
        std::vector<std::vector<uint8_t>> seen(static_cast<size_t>(arcs),
                                               std::vector<uint8_t>(2, 0));
        int faces = 0;
        for (int l = 1; l <= arcs; ++l) {
            for (int dir = 0; dir < 2; ++dir) {
                if (seen[static_cast<size_t>(l - 1)][static_cast<size_t>(dir)]) continue;
                ++faces;
                Dart d{l, dir};
                do {
                    seen[static_cast<size_t>(d.first - 1)][static_cast<size_t>(d.second)] = 1;
                    d = successor(d);
                } while (d != Dart{l, dir});
            }
        }
        if (faces == n + 2) out.witnesses.push_back(bits);
    }
    out.realizable = !out.witnesses.empty();
    return out;
}

} // namespace testutil

#pragma once

// Shared test fixtures and independent oracles. Everything here re-derives
// results from first principles so the library paths are checked against
// code that does not share their implementation.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "knots/notation.hpp"

namespace testutil {

using knots::CrossingPair;
using knots::Notation;

inline Notation trefoil() {
    return knots::parse_notation("(1,4)(3,6)(5,2)");
}

// Uniform random perfect matching of 1..2n with random roles. Parity is
// not enforced; pass parity_valid=true to match odds with evens only.
inline Notation random_notation(std::mt19937_64& rng, int n, bool parity_valid = false) {
    std::vector<int> a, b;
    if (parity_valid) {
        for (int i = 1; i <= 2 * n; i += 2) a.push_back(i);
        for (int i = 2; i <= 2 * n; i += 2) b.push_back(i);
        std::shuffle(b.begin(), b.end(), rng);
    } else {
        std::vector<int> all(2 * n);
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        for (int i = 0; i < n; ++i) {
            a.push_back(all[2 * i]);
            b.push_back(all[2 * i + 1]);
        }
    }
    std::vector<CrossingPair> pairs;
    for (int i = 0; i < n; ++i) {
        bool flip = (rng() & 1) != 0;
        pairs.push_back(flip ? CrossingPair{b[i], a[i]} : CrossingPair{a[i], b[i]});
    }
    return Notation::from_pairs(std::move(pairs));
}

// Independent relabeling: build the rotated/reversed visit sequence as an
// explicit array and renumber from it, rather than using index formulas.
inline Notation relabel_oracle(const Notation& v, int shift, bool reversed) {
    const int two_n = v.labels();
    std::vector<int> order;           // order[i] = old label visited i-th
    if (!reversed) {
        for (int i = 0; i < two_n; ++i) order.push_back((shift + i) % two_n + 1);
    } else {
        // Reversed traversal starts at old label `shift` (2n when shift=0)
        // and walks the cycle backwards.
        int cur = (shift == 0) ? two_n : shift;
        for (int i = 0; i < two_n; ++i) {
            order.push_back(cur);
            cur = (cur == 1) ? two_n : cur - 1;
        }
    }
    std::vector<int> new_of_old(static_cast<size_t>(two_n) + 1, 0);
    for (int i = 0; i < two_n; ++i) new_of_old[static_cast<size_t>(order[i])] = i + 1;
    std::vector<CrossingPair> pairs;
    for (const CrossingPair& c : v.pairs())
        pairs.push_back({new_of_old[static_cast<size_t>(c.over)],
                         new_of_old[static_cast<size_t>(c.under)]});
    return Notation::from_pairs(std::move(pairs));
}

// Brute-force preferred notation: materialize all 4n words, take the least.
inline Notation canonical_oracle(const Notation& v) {
    if (v.empty()) return v;
    Notation best = v;
    knots::SignedWord best_word = knots::encode_word(v);
    for (int rev = 0; rev < 2; ++rev) {
        for (int s = 0; s < v.labels(); ++s) {
            Notation cand = relabel_oracle(v, s, rev != 0);
            knots::SignedWord w = knots::encode_word(cand);
            if (w < best_word) {
                best_word = w;
                best = cand;
            }
        }
    }
    return best;
}

// All parity-valid notations with n crossings (odd labels matched to even,
// both orientations). 2^n * n! entries; keep n small.
inline std::vector<Notation> all_parity_valid(int n) {
    std::vector<int> evens;
    for (int i = 2; i <= 2 * n; i += 2) evens.push_back(i);
    std::sort(evens.begin(), evens.end());
    std::vector<Notation> out;
    do {
        for (uint32_t roles = 0; roles < (uint32_t{1} << n); ++roles) {
            std::vector<CrossingPair> pairs;
            for (int i = 0; i < n; ++i) {
                int odd = 2 * i + 1, even = evens[static_cast<size_t>(i)];
                pairs.push_back((roles >> i) & 1 ? CrossingPair{even, odd}
                                                 : CrossingPair{odd, even});
            }
            out.push_back(Notation::from_pairs(std::move(pairs)));
        }
    } while (std::next_permutation(evens.begin(), evens.end()));
    return out;
}

} // namespace testutil

#pragma once

// Generalized tricolorability. Strands (arcs between consecutive
// undercrossings) are mapped to {1..r} subject to the linear relation
//     out = t*in + (1-t)*over       (mod r)  at positive crossings,
//     out = t'*in + (1-t')*over     (mod r)  at negative, t' = t^-1,
// with gcd(t, r) = 1. The t = r-1 member is the classic 2*over = in + out
// rule, where the sign does not matter. Crossing signs come from the
// notation's witness embedding; a mirrored witness swaps t and t^-1, so
// the well-defined invariant per scheme is the unordered count pair over
// {t, t^-1} - which is also the pair over {v, mirror(v)}. The pair is a
// move invariant; vectors of pairs over a scheme set separate
// inequivalent knots.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "knots/notation.hpp"
#include "knots/realizability.hpp"

namespace knots {

struct ColoringScheme {
    int r = 3; // modulus, >= 2
    int t = 2; // unit of Z_r

    friend bool operator==(const ColoringScheme&, const ColoringScheme&) = default;
    friend bool operator<(const ColoringScheme& a, const ColoringScheme& b) {
        return a.r != b.r ? a.r < b.r : a.t < b.t;
    }
};

inline void validate_scheme(const ColoringScheme& s) {
    if (s.r < 2) throw domain_error("coloring scheme: modulus must be >= 2");
    if (std::gcd(mod_floor(s.t, s.r), s.r) != 1)
        throw domain_error("coloring scheme: t=" + std::to_string(s.t) +
                           " is not a unit mod " + std::to_string(s.r));
}

// r in {3,5,7,11,13} with every unit t except the uninformative t = 1.
inline std::vector<ColoringScheme> default_schemes() {
    std::vector<ColoringScheme> out;
    for (int r : {3, 5, 7, 11, 13})
        for (int t = 2; t < r; ++t) out.push_back({r, t});
    return out;
}

// Modular inverse of a unit.
inline int mod_inverse(int t, int r) {
    int a = mod_floor(t, r), b = r, x0 = 1, x1 = 0;
    while (b != 0) {
        int q = a / b;
        int tmp = a - q * b;
        a = b;
        b = tmp;
        tmp = x0 - q * x1;
        x0 = x1;
        x1 = tmp;
    }
    if (a != 1) throw domain_error("mod_inverse: not a unit");
    return mod_floor(x0, r);
}

struct CrossingStrands {
    int over = 0;
    int in_under = 0;
    int out_under = 0;
    bool positive = true; // crossing sign under the witness embedding
};

struct StrandStructure {
    int strand_count = 1;
    std::vector<CrossingStrands> crossings;
};

// Strand k runs from the k-th undercrossing (exclusive) to the (k+1)-th
// (inclusive), cyclically by label order. Requires a drawable notation;
// crossing signs are read off the deterministic witness embedding.
inline StrandStructure strands(const Notation& v) {
    RealizabilityVerdict verdict = is_realizable(v);
    if (!verdict.realizable)
        throw domain_error("strands: notation is not drawable");
    StrandStructure s;
    if (v.empty()) return s;
    const int n = v.n();
    std::vector<int> unders;
    unders.reserve(static_cast<size_t>(n));
    for (const CrossingPair& c : v.pairs()) unders.push_back(c.under);
    std::sort(unders.begin(), unders.end());
    auto strand_of_over = [&](int label) {
        auto it = std::upper_bound(unders.begin(), unders.end(), label);
        int idx = static_cast<int>(it - unders.begin());
        return (idx + n - 1) % n;
    };
    auto pos_of_under = [&](int label) {
        return static_cast<int>(std::lower_bound(unders.begin(), unders.end(), label) -
                                unders.begin());
    };
    s.strand_count = n;
    for (size_t c = 0; c < v.pairs().size(); ++c) {
        const CrossingPair& pair = v.pairs()[c];
        int p = pos_of_under(pair.under);
        s.crossings.push_back({strand_of_over(pair.over), (p + n - 1) % n, p,
                               !verdict.witness->bit(static_cast<int>(c))});
    }
    return s;
}

namespace detail {

// Number of solutions of A x = 0 over Z_r, by diagonalizing with gcd
// pivoting. Entries live in [0, r); no divisibility chain is needed since
// the count is prod gcd(d_i, r) * r^(cols - pivots).
inline uint64_t count_nullspace_mod(std::vector<std::vector<int64_t>> m, int cols, int64_t r) {
    const int rows = static_cast<int>(m.size());
    for (auto& row : m)
        for (auto& x : row) x = mod_floor(static_cast<int>(x % r), static_cast<int>(r));
    int pos = 0;
    std::vector<int64_t> diag;
    while (pos < rows && pos < cols) {
        int pi = -1, pj = -1;
        int64_t best = r;
        for (int i = pos; i < rows; ++i)
            for (int j = pos; j < cols; ++j)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0 &&
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] < best) {
                    best = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[static_cast<size_t>(pos)], m[static_cast<size_t>(pi)]);
        for (int i = 0; i < rows; ++i)
            std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(pos)],
                      m[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
        bool clean = false;
        while (!clean) {
            clean = true;
            int64_t piv = m[static_cast<size_t>(pos)][static_cast<size_t>(pos)];
            for (int i = pos + 1; i < rows && clean; ++i) {
                int64_t a = m[static_cast<size_t>(i)][static_cast<size_t>(pos)];
                if (a == 0) continue;
                int64_t q = a / piv;
                for (int j = pos; j < cols; ++j) {
                    int64_t val = m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                  q * m[static_cast<size_t>(pos)][static_cast<size_t>(j)];
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        mod_floor(static_cast<int>(val % r), static_cast<int>(r));
                }
                if (m[static_cast<size_t>(i)][static_cast<size_t>(pos)] != 0) {
                    // Remainder smaller than the pivot surfaced; re-pivot on it.
                    std::swap(m[static_cast<size_t>(pos)], m[static_cast<size_t>(i)]);
                    clean = false;
                }
            }
            piv = m[static_cast<size_t>(pos)][static_cast<size_t>(pos)];
            for (int j = pos + 1; j < cols && clean; ++j) {
                int64_t a = m[static_cast<size_t>(pos)][static_cast<size_t>(j)];
                if (a == 0) continue;
                int64_t q = a / piv;
                for (int i = pos; i < rows; ++i) {
                    int64_t val = m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                  q * m[static_cast<size_t>(i)][static_cast<size_t>(pos)];
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        mod_floor(static_cast<int>(val % r), static_cast<int>(r));
                }
                if (m[static_cast<size_t>(pos)][static_cast<size_t>(j)] != 0) {
                    for (int i = 0; i < rows; ++i)
                        std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(pos)],
                                  m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                    clean = false;
                }
            }
        }
        diag.push_back(m[static_cast<size_t>(pos)][static_cast<size_t>(pos)]);
        ++pos;
    }
    uint64_t count = 1;
    auto mul_checked = [&](uint64_t a, uint64_t b) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        if (p > UINT64_MAX / 2) throw domain_error("coloring count overflow");
        return static_cast<uint64_t>(p);
    };
    for (int64_t d : diag)
        count = mul_checked(count, static_cast<uint64_t>(std::gcd(d, r)));
    for (int j = static_cast<int>(diag.size()); j < cols; ++j)
        count = mul_checked(count, static_cast<uint64_t>(r));
    return count;
}

} // namespace detail

// Exhaustive oracle over all r^strands assignments. Guarded.
inline uint64_t count_colorings_bruteforce(const Notation& v, const ColoringScheme& scheme) {
    validate_scheme(scheme);
    StrandStructure s = strands(v);
    double space = std::pow(static_cast<double>(scheme.r), s.strand_count);
    if (space > 1e7)
        throw domain_error("count_colorings_bruteforce: r^strands exceeds the 1e7 guard");
    const int64_t r = scheme.r;
    const int64_t t_pos = mod_floor(scheme.t, scheme.r);
    const int64_t t_neg = mod_inverse(scheme.t, scheme.r);
    std::vector<int64_t> color(static_cast<size_t>(s.strand_count), 0);
    uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const CrossingStrands& c : s.crossings) {
            int64_t t = c.positive ? t_pos : t_neg;
            int64_t want = mod_floor(
                static_cast<int>((t * color[static_cast<size_t>(c.in_under)] +
                                  (1 - t) * color[static_cast<size_t>(c.over)]) %
                                 r),
                static_cast<int>(r));
            if (want != color[static_cast<size_t>(c.out_under)]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int i = 0;
        while (i < s.strand_count && ++color[static_cast<size_t>(i)] == r) {
            color[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == s.strand_count) break;
    }
    return count;
}

namespace detail {

inline uint64_t count_colorings_on(const StrandStructure& s, const ColoringScheme& scheme) {
    std::vector<std::vector<int64_t>> m(
        s.crossings.size(), std::vector<int64_t>(static_cast<size_t>(s.strand_count), 0));
    const int r = scheme.r;
    const int t_pos = mod_floor(scheme.t, r);
    const int t_neg = mod_inverse(scheme.t, r);
    for (size_t i = 0; i < s.crossings.size(); ++i) {
        const CrossingStrands& c = s.crossings[i];
        int t = c.positive ? t_pos : t_neg;
        m[i][static_cast<size_t>(c.in_under)] += t;
        m[i][static_cast<size_t>(c.over)] += 1 - t;
        m[i][static_cast<size_t>(c.out_under)] += -1;
    }
    return count_nullspace_mod(std::move(m), s.strand_count, r);
}

} // namespace detail

// Exact count by linear algebra mod r; equals the brute-force count.
inline uint64_t count_colorings(const Notation& v, const ColoringScheme& scheme) {
    validate_scheme(scheme);
    return detail::count_colorings_on(strands(v), scheme);
}

struct FingerprintEntry {
    int r = 0;
    int t = 0;
    uint64_t lo = 0; // min(count(v), count(mirror v))
    uint64_t hi = 0;

    friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

// Mirror-symmetrized invariant vector, ordered by (r, t).
struct Fingerprint {
    std::vector<FingerprintEntry> entries;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    friend bool operator<(const Fingerprint& a, const Fingerprint& b) {
        auto key = [](const FingerprintEntry& e) {
            return std::tuple(e.r, e.t, e.lo, e.hi);
        };
        return std::lexicographical_compare(
            a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
            [&](const FingerprintEntry& x, const FingerprintEntry& y) { return key(x) < key(y); });
    }
};

// Per scheme, the unordered pair of counts for v and mirror(v). Mirroring
// swaps t and t^-1, so both counts are evaluated on v's strand structure.
inline Fingerprint fingerprint(const Notation& v, std::vector<ColoringScheme> schemes) {
    if (schemes.empty()) throw domain_error("fingerprint: scheme set is empty");
    std::sort(schemes.begin(), schemes.end());
    for (const ColoringScheme& s : schemes) validate_scheme(s);
    StrandStructure sv = strands(v);
    Fingerprint fp;
    for (const ColoringScheme& s : schemes) {
        uint64_t a = detail::count_colorings_on(sv, s);
        uint64_t b = detail::count_colorings_on(sv, {s.r, mod_inverse(s.t, s.r)});
        fp.entries.push_back({s.r, s.t, std::min(a, b), std::max(a, b)});
    }
    return fp;
}

inline std::string serialize_fingerprint(const Fingerprint& fp) {
    std::string out;
    for (size_t i = 0; i < fp.entries.size(); ++i) {
        const auto& e = fp.entries[i];
        if (i) out += ';';
        out += std::to_string(e.r) + ':' + std::to_string(e.t) + ':' +
               std::to_string(e.lo) + ',' + std::to_string(e.hi);
    }
    return out;
}

inline Fingerprint parse_fingerprint(std::string_view text) {
    Fingerprint fp;
    size_t pos = 0;
    auto read_int = [&](char stop) -> uint64_t {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (stop != '\0' && (pos >= text.size() || text[pos] != stop)))
            throw parse_error("malformed fingerprint record near offset " + std::to_string(start));
        if (stop != '\0') ++pos;
        return std::stoull(std::string(text.substr(start, pos - start)));
    };
    while (pos < text.size()) {
        FingerprintEntry e;
        e.r = static_cast<int>(read_int(':'));
        e.t = static_cast<int>(read_int(':'));
        e.lo = read_int(',');
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("malformed fingerprint record near offset " +
                                            std::to_string(start));
        e.hi = std::stoull(std::string(text.substr(start, pos - start)));
        fp.entries.push_back(e);
        if (pos < text.size()) {
            if (text[pos] != ';')
                throw parse_error("malformed fingerprint record near offset " +
                                  std::to_string(pos));
            ++pos;
        }
    }
    return fp;
}

} // namespace knots

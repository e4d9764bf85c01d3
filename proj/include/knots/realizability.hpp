#pragma once

// Drawability of a notation. The necessary parity condition is checked
// directly; the full Jordan-curve condition is decided exactly by searching
// the per-crossing chirality assignments for a genus-0 rotation system.
//
// The underlying 4-regular map: vertices are the n crossings, edges are the
// 2n traversal arcs (arc l joins the crossings of labels l and l+1, cyclic).
// At a transverse crossing the four half-edge ends alternate between the two
// strand passages, which leaves exactly two cyclic orders: the chirality bit.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knots/notation.hpp"

namespace knots {

inline bool parity_check(const Notation& v) {
    for (const CrossingPair& c : v.pairs())
        if ((c.over + c.under) % 2 == 0) return false;
    return true;
}

// Chords as vertices, edges where chords interleave on the label cycle.
// Row i is a bitmask over chord indices (pairs() order).
struct InterlacementGraph {
    int n = 0;
    std::vector<uint32_t> adj;

    int degree(int i) const { return __builtin_popcount(adj[static_cast<size_t>(i)]); }
    bool edge(int i, int j) const { return (adj[static_cast<size_t>(i)] >> j) & 1; }
};

inline InterlacementGraph interlacement_graph(const Notation& v) {
    if (v.empty()) throw domain_error("interlacement_graph: empty notation");
    InterlacementGraph g;
    g.n = v.n();
    g.adj.assign(static_cast<size_t>(g.n), 0);
    for (int i = 0; i < g.n; ++i) {
        int a = std::min(v.pairs()[static_cast<size_t>(i)].over, v.pairs()[static_cast<size_t>(i)].under);
        int b = std::max(v.pairs()[static_cast<size_t>(i)].over, v.pairs()[static_cast<size_t>(i)].under);
        for (int j = i + 1; j < g.n; ++j) {
            int c = v.pairs()[static_cast<size_t>(j)].over;
            int d = v.pairs()[static_cast<size_t>(j)].under;
            bool c_in = (c > a && c < b), d_in = (d > a && d < b);
            if (c_in != d_in) {
                g.adj[static_cast<size_t>(i)] |= uint32_t{1} << j;
                g.adj[static_cast<size_t>(j)] |= uint32_t{1} << i;
            }
        }
    }
    return g;
}

// Chirality assignment over the crossings (pairs() order). Bit 0 and bit 1
// select the two transverse interleavings of the four ports at a crossing.
struct RotationSystem {
    int n = 0;
    uint32_t bits = 0;

    bool bit(int crossing) const { return (bits >> crossing) & 1; }

    std::string bit_string() const {
        std::string s;
        for (int i = 0; i < n; ++i) s += bit(i) ? '1' : '0';
        return s;
    }
};

enum class RealizabilityReason { realizable, parity_violation, no_planar_rotation };

struct RealizabilityVerdict {
    bool realizable = false;
    std::optional<RotationSystem> witness;
    RealizabilityReason reason = RealizabilityReason::realizable;
};

namespace detail {

// Ports: each label x owns two connection points, encoded 2*(x-1)+io with
// io=0 toward arc e_{x-1} (in) and io=1 toward arc e_x (out).
// Directed edges: 2*(l-1)+dir with dir=0 the forward traversal of arc l.

struct FaceTracer {
    int n = 0;
    int arcs = 0;                    // 2n
    std::vector<int> arrival_port;   // directed edge -> port it arrives at
    std::vector<int> depart_edge;    // port -> directed edge leaving it
    std::vector<int> sigma;          // port -> rotation successor port
    std::vector<std::array<int, 4>> ports_of_crossing;
    std::vector<uint8_t> seen;

    explicit FaceTracer(const Notation& v) {
        n = v.n();
        arcs = 2 * n;
        arrival_port.assign(static_cast<size_t>(2 * arcs), 0);
        depart_edge.assign(static_cast<size_t>(2 * arcs), 0);
        sigma.assign(static_cast<size_t>(2 * arcs), 0);
        seen.assign(static_cast<size_t>(2 * arcs), 0);
        for (int l = 1; l <= arcs; ++l) {
            int next_label = l % arcs + 1;
            arrival_port[static_cast<size_t>(2 * (l - 1))] = 2 * (next_label - 1);     // fwd -> in(l+1)
            arrival_port[static_cast<size_t>(2 * (l - 1) + 1)] = 2 * (l - 1) + 1;      // bwd -> out(l)
        }
        for (int x = 1; x <= arcs; ++x) {
            depart_edge[static_cast<size_t>(2 * (x - 1) + 1)] = 2 * (x - 1);           // out(x): fwd arc x
            int prev_arc = (x == 1) ? arcs : x - 1;
            depart_edge[static_cast<size_t>(2 * (x - 1))] = 2 * (prev_arc - 1) + 1;    // in(x): bwd arc x-1
        }
        ports_of_crossing.resize(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) {
            int a = v.pairs()[static_cast<size_t>(c)].over;
            int b = v.pairs()[static_cast<size_t>(c)].under;
            ports_of_crossing[static_cast<size_t>(c)] = {2 * (a - 1), 2 * (a - 1) + 1,
                                                         2 * (b - 1), 2 * (b - 1) + 1};
        }
    }

    void set_rotations(uint32_t bits) {
        for (int c = 0; c < n; ++c) {
            const auto& p = ports_of_crossing[static_cast<size_t>(c)];
            const int in_a = p[0], out_a = p[1], in_b = p[2], out_b = p[3];
            if ((bits >> c) & 1) {
                // (in_a, out_b, out_a, in_b)
                sigma[static_cast<size_t>(in_a)] = out_b;
                sigma[static_cast<size_t>(out_b)] = out_a;
                sigma[static_cast<size_t>(out_a)] = in_b;
                sigma[static_cast<size_t>(in_b)] = in_a;
            } else {
                // (in_a, in_b, out_a, out_b)
                sigma[static_cast<size_t>(in_a)] = in_b;
                sigma[static_cast<size_t>(in_b)] = out_a;
                sigma[static_cast<size_t>(out_a)] = out_b;
                sigma[static_cast<size_t>(out_b)] = in_a;
            }
        }
    }

    int next_edge(int d) const {
        return depart_edge[static_cast<size_t>(sigma[static_cast<size_t>(arrival_port[static_cast<size_t>(d)])])];
    }

    int count_faces() {
        std::fill(seen.begin(), seen.end(), 0);
        int faces = 0;
        for (int d0 = 0; d0 < 2 * arcs; ++d0) {
            if (seen[static_cast<size_t>(d0)]) continue;
            ++faces;
            int d = d0;
            do {
                seen[static_cast<size_t>(d)] = 1;
                d = next_edge(d);
            } while (d != d0);
        }
        return faces;
    }
};

} // namespace detail

inline RealizabilityVerdict is_realizable(const Notation& v) {
    RealizabilityVerdict out;
    if (v.empty()) {
        out.realizable = true;
        out.witness = RotationSystem{0, 0};
        return out;
    }
    if (!parity_check(v)) {
        out.reason = RealizabilityReason::parity_violation;
        return out;
    }
    // Even interlacement degree is necessary; reject without searching.
    InterlacementGraph g = interlacement_graph(v);
    for (int i = 0; i < g.n; ++i)
        if (g.degree(i) % 2 != 0) {
            out.reason = RealizabilityReason::no_planar_rotation;
            return out;
        }
    const int n = v.n();
    detail::FaceTracer tracer(v);
    const int want = n + 2;
    // Deterministic witness order: lexicographic over crossing index with
    // bit 0 before bit 1, i.e. crossing 0 is the most significant bit.
    for (uint32_t x = 0; x < (uint32_t{1} << n); ++x) {
        uint32_t bits = 0;
        for (int c = 0; c < n; ++c)
            bits |= ((x >> (n - 1 - c)) & 1u) << c;
        tracer.set_rotations(bits);
        if (tracer.count_faces() == want) {
            out.realizable = true;
            out.witness = RotationSystem{n, bits};
            return out;
        }
    }
    out.reason = RealizabilityReason::no_planar_rotation;
    return out;
}

// A face: the cyclic list of directed arcs along its boundary walk.
// Directed arc 2*(l-1)+dir traverses arc l forward (dir=0) or backward.
struct Face {
    std::vector<int> edges;
};

inline std::vector<Face> faces_of(const Notation& v, const RotationSystem& w) {
    if (v.n() != w.n) throw domain_error("faces_of: witness does not match notation");
    if (v.empty()) return {Face{}, Face{}};
    detail::FaceTracer tracer(v);
    tracer.set_rotations(w.bits);
    std::vector<Face> faces;
    std::vector<uint8_t> seen(static_cast<size_t>(4 * v.n()), 0);
    for (int d0 = 0; d0 < 4 * v.n(); ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        Face f;
        int d = d0;
        do {
            seen[static_cast<size_t>(d)] = 1;
            f.edges.push_back(d);
            d = tracer.next_edge(d);
        } while (d != d0);
        faces.push_back(std::move(f));
    }
    return faces;
}

inline std::string to_string(RealizabilityReason r) {
    switch (r) {
        case RealizabilityReason::realizable: return "realizable";
        case RealizabilityReason::parity_violation: return "parity_violation";
        case RealizabilityReason::no_planar_rotation: return "no_planar_rotation";
    }
    return "?";
}

} // namespace knots

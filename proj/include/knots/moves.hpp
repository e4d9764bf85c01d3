#pragma once

// The three equivalence moves as label rewrites, move generation restricted
// to geometrically legal sites of a witness embedding, and bounded
// equivalence search over mirror-identified canonical forms.
//
// Label-level effects:
//   R1: a pair (i,i+1) or (i+1,i) is added or removed; labels >= i move by 2.
//   R2: pairs (i,j),(i+1,j+1) or (i,j+1),(i+1,j) are added or removed;
//       labels between the blocks move by 2, labels above by 4.
//   R3: pairs (i,j),(i',k),(j',k') become (i,k'),(i',j'),(j,k) with
//       |i-i'| = |j-j'| = |k-k'| = 1; all other labels are untouched.
//
// A descriptor carries an alignment (mirror, then start-point/orientation
// relabeling) applied before the literal rewrite. Sites that straddle the
// basepoint (labels 2n,1) are expressed by aligning first, so the rewrite
// itself is always in the literal form above. Search states are canonical
// mirror-identified forms, so alignment does not change the state a move
// reaches.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knots/coloring.hpp"
#include "knots/notation.hpp"
#include "knots/realizability.hpp"

namespace knots {

enum class MoveKind { r1, r2, r3 };
enum class MoveDir { add, remove, replace };

struct MoveAlignment {
    int shift = 0;
    bool reversed = false;
    bool mirrored = false;

    bool identity() const { return shift == 0 && !reversed && !mirrored; }
    friend bool operator==(const MoveAlignment&, const MoveAlignment&) = default;
};

struct MoveDescriptor {
    MoveKind kind = MoveKind::r1;
    MoveDir dir = MoveDir::add;
    MoveAlignment align;
    // R1: site i, over_first picks (i,i+1) vs (i+1,i).
    // R2: blocks {i,i+1} and {j,j+1} in the larger diagram, i < j;
    //     crossed picks (i,j+1),(i+1,j) over (i,j),(i+1,j+1);
    //     low_over puts the i-block strand on top.
    // R3: the sextuple (i,j),(i2,k),(j2,k2) of the replaced pattern.
    int i = 0, j = 0, k = 0, i2 = 0, j2 = 0, k2 = 0;
    bool over_first = false, crossed = false, low_over = false;

    friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

inline std::string serialize_move(const MoveDescriptor& d);

namespace detail {

inline Notation apply_alignment(const Notation& v, const MoveAlignment& a) {
    Notation x = a.mirrored ? mirror(v) : v;
    if (a.shift != 0 || a.reversed) x = relabel(x, a.shift, a.reversed);
    return x;
}

inline std::vector<CrossingPair> pairs_of(const Notation& v) { return v.pairs(); }

} // namespace detail

inline Notation apply_r1(const Notation& v, const MoveDescriptor& d) {
    if (d.kind != MoveKind::r1) throw domain_error("apply_r1: descriptor kind mismatch");
    Notation x = detail::apply_alignment(v, d.align);
    const int two_n = x.labels();
    std::vector<CrossingPair> pairs;
    if (d.dir == MoveDir::add) {
        if (d.i < 1 || d.i > two_n + 1)
            throw domain_error("apply_r1: add site " + std::to_string(d.i) + " out of range");
        for (const CrossingPair& c : x.pairs())
            pairs.push_back({c.over >= d.i ? c.over + 2 : c.over,
                             c.under >= d.i ? c.under + 2 : c.under});
        pairs.push_back(d.over_first ? CrossingPair{d.i, d.i + 1}
                                     : CrossingPair{d.i + 1, d.i});
    } else if (d.dir == MoveDir::remove) {
        CrossingPair want = d.over_first ? CrossingPair{d.i, d.i + 1}
                                         : CrossingPair{d.i + 1, d.i};
        bool found = false;
        for (const CrossingPair& c : x.pairs()) {
            if (c == want) {
                found = true;
                continue;
            }
            pairs.push_back({c.over > d.i ? c.over - 2 : c.over,
                             c.under > d.i ? c.under - 2 : c.under});
        }
        if (!found)
            throw domain_error("apply_r1: pair at site " + std::to_string(d.i) +
                               " not present");
    } else {
        throw domain_error("apply_r1: direction must be add or remove");
    }
    return Notation::from_pairs(std::move(pairs));
}

inline Notation apply_r2(const Notation& v, const MoveDescriptor& d) {
    if (d.kind != MoveKind::r2) throw domain_error("apply_r2: descriptor kind mismatch");
    Notation x = detail::apply_alignment(v, d.align);
    const int i = d.i, j = d.j;
    if (i < 1 || j < i + 2) throw domain_error("apply_r2: malformed block labels");
    auto block_pairs = [&]() -> std::pair<CrossingPair, CrossingPair> {
        CrossingPair p = d.crossed ? CrossingPair{i, j + 1} : CrossingPair{i, j};
        CrossingPair q = d.crossed ? CrossingPair{i + 1, j} : CrossingPair{i + 1, j + 1};
        if (!d.low_over) {
            std::swap(p.over, p.under);
            std::swap(q.over, q.under);
        }
        return {p, q};
    };
    std::vector<CrossingPair> pairs;
    if (d.dir == MoveDir::add) {
        if (j + 1 > x.labels() + 4)
            throw domain_error("apply_r2: add blocks out of range");
        auto shift_up = [&](int lab) {
            if (lab < i) return lab;
            if (lab <= j - 3) return lab + 2;
            return lab + 4;
        };
        for (const CrossingPair& c : x.pairs())
            pairs.push_back({shift_up(c.over), shift_up(c.under)});
        auto [p, q] = block_pairs();
        pairs.push_back(p);
        pairs.push_back(q);
    } else if (d.dir == MoveDir::remove) {
        auto [p, q] = block_pairs();
        bool found_p = false, found_q = false;
        auto shift_down = [&](int lab) {
            if (lab < i) return lab;
            if (lab <= j - 1) return lab - 2;
            return lab - 4;
        };
        for (const CrossingPair& c : x.pairs()) {
            if (c == p) {
                found_p = true;
                continue;
            }
            if (c == q) {
                found_q = true;
                continue;
            }
            pairs.push_back({shift_down(c.over), shift_down(c.under)});
        }
        if (!found_p || !found_q)
            throw domain_error("apply_r2: block pattern not present at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
    } else {
        throw domain_error("apply_r2: direction must be add or remove");
    }
    return Notation::from_pairs(std::move(pairs));
}

inline Notation apply_r3(const Notation& v, const MoveDescriptor& d) {
    if (d.kind != MoveKind::r3) throw domain_error("apply_r3: descriptor kind mismatch");
    if (d.dir != MoveDir::replace) throw domain_error("apply_r3: direction must be replace");
    Notation x = detail::apply_alignment(v, d.align);
    auto adjacent = [](int a, int b) { return a - b == 1 || b - a == 1; };
    if (!adjacent(d.i, d.i2) || !adjacent(d.j, d.j2) || !adjacent(d.k, d.k2))
        throw domain_error("apply_r3: offsets are not all 1");
    CrossingPair p{d.i, d.j}, q{d.i2, d.k}, s{d.j2, d.k2};
    bool fp = false, fq = false, fs = false;
    std::vector<CrossingPair> pairs;
    for (const CrossingPair& c : x.pairs()) {
        if (c == p) {
            fp = true;
            continue;
        }
        if (c == q) {
            fq = true;
            continue;
        }
        if (c == s) {
            fs = true;
            continue;
        }
        pairs.push_back(c);
    }
    if (!fp || !fq || !fs) throw domain_error("apply_r3: triple not present");
    pairs.push_back({d.i, d.k2});
    pairs.push_back({d.i2, d.j2});
    pairs.push_back({d.j, d.k});
    return Notation::from_pairs(std::move(pairs));
}

inline Notation apply_move(const Notation& v, const MoveDescriptor& d) {
    switch (d.kind) {
        case MoveKind::r1: return apply_r1(v, d);
        case MoveKind::r2: return apply_r2(v, d);
        case MoveKind::r3: return apply_r3(v, d);
    }
    throw domain_error("apply_move: bad descriptor");
}

// --- legal move generation ---------------------------------------------

struct Move {
    MoveDescriptor descriptor;
    Notation result;
};

namespace detail {

inline int cyclic_succ(int label, int two_n) { return label % two_n + 1; }

// Relabel so that a site touching the basepoint becomes literal. Shifting
// by 2n-1 maps 2n -> 1 and 1 -> 2.
inline MoveAlignment unwrap_alignment(int two_n) { return MoveAlignment{two_n - 1, false, false}; }

inline void generate_r1_removes(const Notation& v, std::vector<MoveDescriptor>& out) {
    const int two_n = v.labels();
    for (const CrossingPair& c : v.pairs()) {
        if (c.under == c.over + 1)
            out.push_back({MoveKind::r1, MoveDir::remove, {}, c.over, 0, 0, 0, 0, 0, true});
        if (c.over == c.under + 1)
            out.push_back({MoveKind::r1, MoveDir::remove, {}, c.under, 0, 0, 0, 0, 0, false});
        if (two_n > 2) {
            if (c.over == two_n && c.under == 1)
                out.push_back({MoveKind::r1, MoveDir::remove, unwrap_alignment(two_n), 1, 0, 0,
                               0, 0, 0, true});
            if (c.under == two_n && c.over == 1)
                out.push_back({MoveKind::r1, MoveDir::remove, unwrap_alignment(two_n), 1, 0, 0,
                               0, 0, 0, false});
        }
    }
}

inline void generate_r2_removes(const Notation& v, std::vector<MoveDescriptor>& out) {
    const int two_n = v.labels();
    const auto& ps = v.pairs();
    for (size_t ia = 0; ia < ps.size(); ++ia) {
        for (size_t ib = 0; ib < ps.size(); ++ib) {
            if (ia == ib) continue;
            const CrossingPair& pa = ps[ia];
            const CrossingPair& pb = ps[ib];
            if (pb.over != cyclic_succ(pa.over, two_n)) continue;
            int over_start = pa.over;
            int under_start;
            bool crossed;
            if (pb.under == cyclic_succ(pa.under, two_n)) {
                under_start = pa.under;
                crossed = false;
            } else if (pa.under == cyclic_succ(pb.under, two_n)) {
                under_start = pb.under;
                crossed = true;
            } else {
                continue;
            }
            bool wrap = (over_start == two_n) || (under_start == two_n);
            MoveAlignment align = wrap ? unwrap_alignment(two_n) : MoveAlignment{};
            int o = relabel_map(over_start, align.shift, false, two_n);
            int u = relabel_map(under_start, align.shift, false, two_n);
            MoveDescriptor d{MoveKind::r2, MoveDir::remove, align,
                             std::min(o, u), 0, 0, 0, 0, 0,
                             false, crossed, o < u};
            d.j = std::max(o, u);
            out.push_back(d);
        }
    }
}

inline void generate_r3_replaces(const Notation& v, const std::vector<Face>& faces,
                                 std::vector<MoveDescriptor>& out) {
    const int two_n = v.labels();
    auto arc_of = [](int d) { return d / 2 + 1; };
    auto arrival_label = [&](int d) {
        return (d & 1) ? arc_of(d) : cyclic_succ(arc_of(d), two_n);
    };
    auto departure_label = [&](int d) {
        return (d & 1) ? cyclic_succ(arc_of(d), two_n) : arc_of(d);
    };
    for (const Face& f : faces) {
        if (f.edges.size() != 3) continue;
        int arcs[3] = {arc_of(f.edges[0]), arc_of(f.edges[1]), arc_of(f.edges[2])};
        if (arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] == arcs[2]) continue;
        // Corner t sits between side t (arriving) and side t+1 (departing).
        int corner_x[3], corner_y[3], corner_cross[3];
        bool degenerate = false;
        for (int t = 0; t < 3 && !degenerate; ++t) {
            corner_x[t] = arrival_label(f.edges[static_cast<size_t>(t)]);
            corner_y[t] = departure_label(f.edges[static_cast<size_t>((t + 1) % 3)]);
            corner_cross[t] = v.crossing_of(corner_x[t]);
            if (v.crossing_of(corner_y[t]) != corner_cross[t]) degenerate = true;
        }
        if (degenerate || corner_cross[0] == corner_cross[1] ||
            corner_cross[1] == corner_cross[2] || corner_cross[0] == corner_cross[2])
            continue;
        // Side t meets corner t-1 (as departure) and corner t (as arrival).
        int top = -1, bottom = -1;
        for (int t = 0; t < 3; ++t) {
            bool dep_over = v.is_over(corner_y[static_cast<size_t>((t + 2) % 3)]);
            bool arr_over = v.is_over(corner_x[static_cast<size_t>(t)]);
            if (dep_over && arr_over) top = t;
            if (!dep_over && !arr_over) bottom = t;
        }
        if (top < 0 || bottom < 0 || top == bottom) continue; // cyclic pattern
        int mid = 3 - top - bottom;
        // Visit of side s at corner c: arrival if c == s, departure if c == s-1.
        auto visit_at = [&](int side, int corner) {
            return corner == side ? corner_x[static_cast<size_t>(corner)]
                                  : corner_y[static_cast<size_t>(corner)];
        };
        auto corner_joining = [&](int s1, int s2) {
            for (int t = 0; t < 3; ++t) {
                int arriving = t, departing = (t + 1) % 3;
                if ((arriving == s1 && departing == s2) || (arriving == s2 && departing == s1))
                    return t;
            }
            return -1;
        };
        int ab = corner_joining(top, mid);
        int ac = corner_joining(top, bottom);
        int bc = corner_joining(mid, bottom);
        if (ab < 0 || ac < 0 || bc < 0) continue;
        int side_arcs_sorted[3] = {arcs[0], arcs[1], arcs[2]};
        std::sort(side_arcs_sorted, side_arcs_sorted + 3);
        MoveAlignment align{};
        if (side_arcs_sorted[0] == two_n || side_arcs_sorted[1] == two_n ||
            side_arcs_sorted[2] == two_n) {
            int s = 1;
            while (s == side_arcs_sorted[0] || s == side_arcs_sorted[1] ||
                   s == side_arcs_sorted[2])
                ++s;
            align.shift = s;
        }
        auto mapped = [&](int label) { return relabel_map(label, align.shift, false, two_n); };
        MoveDescriptor d{MoveKind::r3, MoveDir::replace, align,
                         mapped(visit_at(top, ab)),  mapped(visit_at(mid, ab)),
                         mapped(visit_at(bottom, ac)), mapped(visit_at(top, ac)),
                         mapped(visit_at(mid, bc)),  mapped(visit_at(bottom, bc))};
        out.push_back(d);
    }
}

inline void generate_r2_adds(const Notation& v, const std::vector<Face>& faces,
                             std::vector<MoveDescriptor>& out) {
    if (v.empty()) {
        for (bool low_over : {true, false})
            out.push_back({MoveKind::r2, MoveDir::add, {}, 1, 3, 0, 0, 0, 0,
                           false, true, low_over});
        return;
    }
    auto arc_of = [](int d) { return d / 2 + 1; };
    for (const Face& f : faces) {
        for (size_t a = 0; a < f.edges.size(); ++a) {
            for (size_t b = a; b < f.edges.size(); ++b) {
                int da = f.edges[a], db = f.edges[b];
                int la = arc_of(da), lb = arc_of(db);
                int i, j;
                bool crossed;
                if (a == b) {
                    i = la + 1;
                    j = la + 3;
                    crossed = true;
                } else {
                    if (la == lb) continue;
                    i = std::min(la, lb) + 1;
                    j = std::max(la, lb) + 3;
                    crossed = (da & 1) == (db & 1);
                }
                for (bool low_over : {true, false})
                    out.push_back({MoveKind::r2, MoveDir::add, {}, i, j, 0, 0, 0, 0,
                                   false, crossed, low_over});
            }
        }
    }
}

inline void generate_r1_adds(const Notation& v, std::vector<MoveDescriptor>& out) {
    for (int i = 1; i <= v.labels() + 1; ++i)
        for (bool over_first : {true, false})
            out.push_back({MoveKind::r1, MoveDir::add, {}, i, 0, 0, 0, 0, 0, over_first});
}

} // namespace detail

// Every geometrically legal move from v, bounded by budget_n crossings.
// Requires a drawable input; R2 additions and R3 sites are read off the
// faces of the deterministic witness embedding.
inline std::vector<Move> legal_moves(const Notation& v, int budget_n) {
    RealizabilityVerdict verdict = is_realizable(v);
    if (!verdict.realizable)
        throw domain_error("legal_moves: notation is not drawable");
    std::vector<Face> faces =
        v.empty() ? std::vector<Face>{} : faces_of(v, *verdict.witness);

    std::vector<MoveDescriptor> descriptors;
    detail::generate_r1_removes(v, descriptors);
    detail::generate_r2_removes(v, descriptors);
    if (v.n() >= 3) detail::generate_r3_replaces(v, faces, descriptors);
    if (v.n() + 1 <= budget_n) detail::generate_r1_adds(v, descriptors);
    if (v.n() + 2 <= budget_n) detail::generate_r2_adds(v, faces, descriptors);

    std::vector<Move> out;
    out.reserve(descriptors.size());
    for (const MoveDescriptor& d : descriptors) {
        Notation w = apply_move(v, d);
        if (w.n() > budget_n) continue;
        if (!is_realizable(w).realizable)
            throw domain_error("legal_moves: generated an unrealizable rewrite: " +
                               serialize_move(d) + " on " + serialize_notation(v));
        out.push_back({d, std::move(w)});
    }
    std::sort(out.begin(), out.end(), [](const Move& x, const Move& y) {
        std::string sx = serialize_move(x.descriptor), sy = serialize_move(y.descriptor);
        return sx != sy ? sx < sy : x.result < y.result;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Move& x, const Move& y) {
                              return x.descriptor == y.descriptor && x.result == y.result;
                          }),
              out.end());
    return out;
}

inline std::string serialize_move(const MoveDescriptor& d) {
    std::string out = d.kind == MoveKind::r1 ? "R1" : d.kind == MoveKind::r2 ? "R2" : "R3";
    out += d.dir == MoveDir::add ? " add" : d.dir == MoveDir::remove ? " remove" : " replace";
    if (d.kind == MoveKind::r1) {
        out += " i=" + std::to_string(d.i) + " over=" + (d.over_first ? "1" : "0");
    } else if (d.kind == MoveKind::r2) {
        out += " i=" + std::to_string(d.i) + " j=" + std::to_string(d.j) +
               " crossed=" + (d.crossed ? "1" : "0") +
               " low_over=" + (d.low_over ? "1" : "0");
    } else {
        out += " i=" + std::to_string(d.i) + " i2=" + std::to_string(d.i2) +
               " j=" + std::to_string(d.j) + " j2=" + std::to_string(d.j2) +
               " k=" + std::to_string(d.k) + " k2=" + std::to_string(d.k2);
    }
    if (!d.align.identity())
        out += " align=" + std::to_string(d.align.shift) + "/" +
               (d.align.reversed ? "1" : "0") + "/" + (d.align.mirrored ? "1" : "0");
    return out;
}

// --- equivalence search --------------------------------------------------

namespace detail {

// Inverse of the transform w -> T(w), in the same (mirror first) form.
inline MoveAlignment invert_transform(const WordTransform& t, int two_n) {
    if (two_n == 0) return MoveAlignment{};
    MoveAlignment a;
    a.mirrored = t.mirrored;
    a.reversed = t.reversed;
    a.shift = t.reversed ? t.shift : (two_n - t.shift) % two_n;
    return a;
}

// The strict inverse rewrite, valid on the raw result of the move.
inline MoveDescriptor inverse_on_result(const MoveDescriptor& d) {
    MoveDescriptor inv = d;
    inv.align = MoveAlignment{};
    if (d.kind == MoveKind::r3) {
        std::swap(inv.i, inv.i2);
        std::swap(inv.j, inv.j2);
        std::swap(inv.k, inv.k2);
    } else {
        inv.dir = d.dir == MoveDir::add ? MoveDir::remove : MoveDir::add;
    }
    return inv;
}

} // namespace detail

struct EquivalenceVerdict {
    enum class Status { connected, unknown };
    Status status = Status::unknown;
    std::optional<std::vector<MoveDescriptor>> path;
    uint64_t explored = 0;
};

// Bidirectional breadth-first search over mirror-identified canonical
// forms. Budgets bound crossings per state and expansions; exhausting them
// yields `unknown`, never a claim of inequivalence. A returned path applies
// step by step to the canonical representative of the current state.
inline EquivalenceVerdict equivalent(const Notation& a, const Notation& b, int budget_n,
                                     uint64_t budget_nodes) {
    if (budget_n < std::max(a.n(), b.n()))
        throw domain_error("equivalent: budget_n is below the inputs' crossing numbers");
    if (!is_realizable(a).realizable || !is_realizable(b).realizable)
        throw domain_error("equivalent: both notations must be drawable");

    struct State {
        Notation rep;
        std::string parent;
        MoveDescriptor from_parent; // applies to parent's rep, lands on this key
        MoveDescriptor to_parent;   // applies to this rep, lands on parent's key
        bool has_parent = false;
        int side = 0;
    };

    EquivalenceVerdict out;
    Notation rep_a = mirror_class_key(a);
    Notation rep_b = mirror_class_key(b);
    std::string key_a = detail::min_word_bytes(rep_a, true);
    std::string key_b = detail::min_word_bytes(rep_b, true);
    if (key_a == key_b) {
        out.status = EquivalenceVerdict::Status::connected;
        out.path = std::vector<MoveDescriptor>{};
        return out;
    }

    std::unordered_map<std::string, State> visited;
    std::deque<std::string> frontier[2];
    visited[key_a] = State{rep_a, {}, {}, {}, false, 0};
    visited[key_b] = State{rep_b, {}, {}, {}, false, 1};
    frontier[0].push_back(key_a);
    frontier[1].push_back(key_b);

    auto climb_a = [&](const std::string& from) {
        std::vector<MoveDescriptor> path;
        std::string cur = from;
        while (visited[cur].has_parent) {
            path.push_back(visited[cur].from_parent);
            cur = visited[cur].parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    auto climb_b = [&](const std::string& from) {
        std::vector<MoveDescriptor> path;
        std::string cur = from;
        while (visited[cur].has_parent) {
            path.push_back(visited[cur].to_parent);
            cur = visited[cur].parent;
        }
        return path;
    };

    while (!frontier[0].empty() || !frontier[1].empty()) {
        if (out.explored >= budget_nodes) break;
        int side;
        if (frontier[0].empty())
            side = 1;
        else if (frontier[1].empty())
            side = 0;
        else
            side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::string key = frontier[side].front();
        frontier[side].pop_front();
        ++out.explored;
        Notation rep = visited[key].rep;
        for (const Move& mv : legal_moves(rep, budget_n)) {
            detail::WordTransform t;
            SignedWord w = detail::min_word(mv.result, true, &t);
            std::string child_key;
            child_key.reserve(w.entries.size() * 2);
            for (uint16_t e : w.entries) {
                child_key += static_cast<char>(e & 0xff);
                child_key += static_cast<char>(e >> 8);
            }
            MoveAlignment u = detail::invert_transform(t, mv.result.labels());
            auto it = visited.find(child_key);
            if (it != visited.end()) {
                if (it->second.side == side) continue;
                // Frontiers met; assemble the a -> b path.
                MoveDescriptor back = detail::inverse_on_result(mv.descriptor);
                back.align = u;
                std::vector<MoveDescriptor> path;
                if (side == 0) {
                    path = climb_a(key);
                    path.push_back(mv.descriptor);
                    auto tail = climb_b(child_key);
                    path.insert(path.end(), tail.begin(), tail.end());
                } else {
                    path = climb_a(child_key);
                    path.push_back(back);
                    auto tail = climb_b(key);
                    path.insert(path.end(), tail.begin(), tail.end());
                }
                out.status = EquivalenceVerdict::Status::connected;
                out.path = std::move(path);
                return out;
            }
            MoveDescriptor back = detail::inverse_on_result(mv.descriptor);
            back.align = u;
            Notation child_rep = detail::notation_of_word(w);
            visited[child_key] =
                State{std::move(child_rep), key, mv.descriptor, back, true, side};
            frontier[side].push_back(child_key);
        }
    }
    return out;
}

// Union-find batch dedupe: one shared breadth-first exploration grows every
// item's component; components merge when an expansion reaches a state
// already owned by another root. budget_nodes bounds expansions charged per
// component. `should_stop`, when given, sees the current root of every item
// after each merge and may end the search early.
inline std::vector<std::vector<Notation>> dedupe(
    const std::vector<Notation>& items, int budget_n, uint64_t budget_nodes,
    const std::function<bool(const std::vector<int>&)>& should_stop = {}) {
    struct Seed {
        std::string key;
        Notation rep;
    };
    // Distinct mirror-identified keys, in deterministic (word) order.
    std::vector<Seed> seeds;
    std::vector<int> seed_of_item(items.size(), -1);
    {
        std::unordered_map<std::string, int> index;
        std::vector<std::pair<std::string, size_t>> keyed;
        for (size_t i = 0; i < items.size(); ++i)
            keyed.emplace_back(detail::min_word_bytes(items[i], true), i);
        std::vector<size_t> order(items.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            return keyed[x].first != keyed[y].first ? keyed[x].first < keyed[y].first : x < y;
        });
        for (size_t oi : order) {
            auto [it, fresh] = index.try_emplace(keyed[oi].first,
                                                 static_cast<int>(seeds.size()));
            if (fresh) seeds.push_back({keyed[oi].first, mirror_class_key(items[oi])});
            seed_of_item[keyed[oi].second] = it->second;
        }
    }

    std::vector<int> parent(seeds.size());
    std::vector<uint64_t> expansions(seeds.size(), 0);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto roots_of_items = [&]() {
        std::vector<int> r(items.size());
        for (size_t i = 0; i < items.size(); ++i)
            r[i] = find(seed_of_item[i]);
        return r;
    };

    bool stop = should_stop && should_stop(roots_of_items());

    std::unordered_map<std::string, int> owner; // state key -> seed root
    std::deque<std::pair<std::string, Notation>> queue;
    for (size_t s = 0; s < seeds.size() && !stop; ++s) {
        owner[seeds[s].key] = static_cast<int>(s);
        queue.emplace_back(seeds[s].key, seeds[s].rep);
    }

    while (!queue.empty() && !stop) {
        auto [key, rep] = std::move(queue.front());
        queue.pop_front();
        int root = find(owner[key]);
        if (expansions[static_cast<size_t>(root)] >= budget_nodes) continue;
        ++expansions[static_cast<size_t>(root)];
        for (const Move& mv : legal_moves(rep, budget_n)) {
            detail::WordTransform t;
            SignedWord w = detail::min_word(mv.result, true, &t);
            std::string child_key;
            child_key.reserve(w.entries.size() * 2);
            for (uint16_t e : w.entries) {
                child_key += static_cast<char>(e & 0xff);
                child_key += static_cast<char>(e >> 8);
            }
            auto it = owner.find(child_key);
            if (it == owner.end()) {
                owner.emplace(child_key, root);
                queue.emplace_back(child_key, detail::notation_of_word(w));
                continue;
            }
            int other = find(it->second);
            if (other == root) continue;
            // Merge on a found move path; keep the smaller seed index.
            int winner = std::min(root, other), loser = std::max(root, other);
            parent[static_cast<size_t>(loser)] = winner;
            expansions[static_cast<size_t>(winner)] +=
                expansions[static_cast<size_t>(loser)];
            root = winner;
            if (should_stop && should_stop(roots_of_items())) {
                stop = true;
                break;
            }
        }
    }

    std::vector<std::vector<Notation>> classes;
    {
        std::unordered_map<int, size_t> class_of_root;
        for (size_t i = 0; i < items.size(); ++i) {
            int r = find(seed_of_item[i]);
            auto [it, fresh] = class_of_root.try_emplace(r, classes.size());
            if (fresh) classes.emplace_back();
            classes[it->second].push_back(items[i]);
        }
    }
    for (auto& cls : classes)
        std::sort(cls.begin(), cls.end(), [](const Notation& x, const Notation& y) {
            return encode_word(x) < encode_word(y);
        });
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<Notation>& x, const std::vector<Notation>& y) {
                  return encode_word(x.front()) < encode_word(y.front());
              });
    return classes;
}

} // namespace knots

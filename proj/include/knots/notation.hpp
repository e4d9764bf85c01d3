#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knots/common.hpp"

namespace knots {

// One crossing of a regular projection: the traversal labels of its
// overcrossing and undercrossing passages.
struct CrossingPair {
    int over = 0;
    int under = 0;

    friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

// A projection code: n pairs over the labels 1..2n, each label used once.
// Pairs are kept sorted by over label; objects are immutable values.
class Notation {
public:
    Notation() = default;

    // Validates the label set and normalizes pair order.
    static Notation from_pairs(std::vector<CrossingPair> pairs) {
        Notation v;
        v.pairs_ = std::move(pairs);
        v.normalize_and_validate();
        return v;
    }

    int n() const { return static_cast<int>(pairs_.size()); }
    int labels() const { return 2 * n(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<CrossingPair>& pairs() const { return pairs_; }

    int partner_of(int label) const { return partner_[static_cast<size_t>(label)]; }
    bool is_over(int label) const { return over_[static_cast<size_t>(label)] != 0; }

    // Index into pairs() of the crossing touching `label`.
    int crossing_of(int label) const { return crossing_[static_cast<size_t>(label)]; }

    friend bool operator==(const Notation& a, const Notation& b) {
        return a.pairs_ == b.pairs_;
    }
    friend bool operator!=(const Notation& a, const Notation& b) { return !(a == b); }

    // Deterministic order used for sets/partitions: lexicographic on the
    // sorted pair list.
    friend bool operator<(const Notation& a, const Notation& b) {
        return std::lexicographical_compare(
            a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(), b.pairs_.end(),
            [](const CrossingPair& x, const CrossingPair& y) {
                return x.over != y.over ? x.over < y.over : x.under < y.under;
            });
    }

private:
    void normalize_and_validate() {
        const int nn = static_cast<int>(pairs_.size());
        if (nn > kMaxCrossings)
            throw parse_error("notation has " + std::to_string(nn) +
                              " crossings; limit is " + std::to_string(kMaxCrossings));
        std::sort(pairs_.begin(), pairs_.end(),
                  [](const CrossingPair& x, const CrossingPair& y) { return x.over < y.over; });
        const size_t m = static_cast<size_t>(2 * nn);
        partner_.assign(m + 1, 0);
        over_.assign(m + 1, 0);
        crossing_.assign(m + 1, 0);
        std::vector<uint8_t> seen(m + 1, 0);
        for (size_t c = 0; c < pairs_.size(); ++c) {
            for (int label : {pairs_[c].over, pairs_[c].under}) {
                if (label < 1 || label > static_cast<int>(m))
                    throw parse_error("label " + std::to_string(label) +
                                      " out of range 1.." + std::to_string(m));
                if (seen[static_cast<size_t>(label)])
                    throw parse_error("duplicate label " + std::to_string(label));
                seen[static_cast<size_t>(label)] = 1;
            }
            partner_[static_cast<size_t>(pairs_[c].over)] = pairs_[c].under;
            partner_[static_cast<size_t>(pairs_[c].under)] = pairs_[c].over;
            over_[static_cast<size_t>(pairs_[c].over)] = 1;
            crossing_[static_cast<size_t>(pairs_[c].over)] = static_cast<int>(c);
            crossing_[static_cast<size_t>(pairs_[c].under)] = static_cast<int>(c);
        }
    }

    std::vector<CrossingPair> pairs_;
    std::vector<int> partner_;
    std::vector<uint8_t> over_;
    std::vector<int> crossing_;
};

// Total-order encoding of a notation: entry at position p is
// (partner(p), role(p)) packed as partner*2 + (role==under), so that
// integer order equals (partner ascending, over before under).
struct SignedWord {
    std::vector<uint16_t> entries;

    static uint16_t pack(int partner, bool under) {
        return static_cast<uint16_t>(partner * 2 + (under ? 1 : 0));
    }
    int partner_at(size_t i) const { return entries[i] >> 1; }
    bool under_at(size_t i) const { return (entries[i] & 1) != 0; }

    friend bool operator==(const SignedWord&, const SignedWord&) = default;
    friend bool operator<(const SignedWord& a, const SignedWord& b) {
        return a.entries < b.entries;
    }
};

inline SignedWord encode_word(const Notation& v) {
    SignedWord w;
    w.entries.reserve(static_cast<size_t>(v.labels()));
    for (int p = 1; p <= v.labels(); ++p)
        w.entries.push_back(SignedWord::pack(v.partner_of(p), !v.is_over(p)));
    return w;
}

namespace detail {

// Label maps for the 4n code symmetries (start point and orientation).
inline int relabel_map(int p, int shift, bool reversed, int two_n) {
    return reversed ? mod_floor(shift - p, two_n) + 1
                    : mod_floor(p - 1 - shift, two_n) + 1;
}

// Old label occupying position j of the relabeled word (inverse map).
inline int relabel_premap(int j, int shift, bool reversed, int two_n) {
    return reversed ? mod_floor(shift - j, two_n) + 1
                    : mod_floor(j - 1 + shift, two_n) + 1;
}

inline uint16_t relabeled_word_entry(const Notation& v, int j, int shift, bool reversed,
                                     bool mirrored = false) {
    const int two_n = v.labels();
    const int p = relabel_premap(j, shift, reversed, two_n);
    const int q = relabel_map(v.partner_of(p), shift, reversed, two_n);
    return SignedWord::pack(q, mirrored ? v.is_over(p) : !v.is_over(p));
}

// One of the code symmetries: optional mirror, then a start/orientation
// relabeling. Mirror is applied first.
struct WordTransform {
    int shift = 0;
    bool reversed = false;
    bool mirrored = false;
};

// Minimal signed word over the 4n relabelings (8n when include_mirror);
// reports the first transform attaining it when `arg` is given.
inline SignedWord min_word(const Notation& v, bool include_mirror,
                           WordTransform* arg = nullptr) {
    if (arg) *arg = WordTransform{};
    if (v.empty()) return SignedWord{};
    const int two_n = v.labels();
    SignedWord best = encode_word(v);
    const int mirror_options = include_mirror ? 2 : 1;
    for (int mir = 0; mir < mirror_options; ++mir) {
        for (int rev = 0; rev < 2; ++rev) {
            for (int s = 0; s < two_n; ++s) {
                if (mir == 0 && rev == 0 && s == 0) continue;
                for (int j = 1; j <= two_n; ++j) {
                    const uint16_t e =
                        relabeled_word_entry(v, j, s, rev != 0, mir != 0);
                    const uint16_t b = best.entries[static_cast<size_t>(j - 1)];
                    if (e > b) break;
                    if (e < b) {
                        for (int t = 1; t < j; ++t)
                            best.entries[static_cast<size_t>(t - 1)] =
                                relabeled_word_entry(v, t, s, rev != 0, mir != 0);
                        best.entries[static_cast<size_t>(j - 1)] = e;
                        for (int t = j + 1; t <= two_n; ++t)
                            best.entries[static_cast<size_t>(t - 1)] =
                                relabeled_word_entry(v, t, s, rev != 0, mir != 0);
                        if (arg) *arg = WordTransform{s, rev != 0, mir != 0};
                        break;
                    }
                }
            }
        }
    }
    return best;
}

// Packed byte key of the minimal word, for hashing search states.
inline std::string min_word_bytes(const Notation& v, bool include_mirror) {
    SignedWord w = min_word(v, include_mirror);
    std::string out;
    out.reserve(w.entries.size() * 2);
    for (uint16_t e : w.entries) {
        out += static_cast<char>(e & 0xff);
        out += static_cast<char>(e >> 8);
    }
    return out;
}

inline Notation notation_of_word(const SignedWord& w) {
    std::vector<CrossingPair> pairs;
    pairs.reserve(w.entries.size() / 2);
    for (size_t i = 0; i < w.entries.size(); ++i)
        if (!w.under_at(i))
            pairs.push_back({static_cast<int>(i) + 1, w.partner_at(i)});
    return Notation::from_pairs(std::move(pairs));
}

} // namespace detail

// Moves the start point by `shift` and optionally reverses the traversal
// orientation; over/under roles are untouched.
inline Notation relabel(const Notation& v, int shift, bool reversed) {
    if (v.empty()) {
        if (shift != 0) throw domain_error("relabel: shift out of range for empty notation");
        return v;
    }
    const int two_n = v.labels();
    if (shift < 0 || shift >= two_n)
        throw domain_error("relabel: shift " + std::to_string(shift) +
                           " out of range 0.." + std::to_string(two_n - 1));
    std::vector<CrossingPair> pairs;
    pairs.reserve(v.pairs().size());
    for (const CrossingPair& c : v.pairs())
        pairs.push_back({detail::relabel_map(c.over, shift, reversed, two_n),
                         detail::relabel_map(c.under, shift, reversed, two_n)});
    return Notation::from_pairs(std::move(pairs));
}

// All distinct codes of the projection; size divides 4n.
inline std::vector<Notation> orbit(const Notation& v) {
    if (v.empty()) return {v};
    std::vector<Notation> out;
    out.reserve(static_cast<size_t>(2 * v.labels()));
    for (int rev = 0; rev < 2; ++rev)
        for (int s = 0; s < v.labels(); ++s)
            out.push_back(relabel(v, s, rev != 0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The preferred notation: orbit member with the minimal signed word.
inline Notation canonicalize(const Notation& v) {
    if (v.empty()) return v;
    return detail::notation_of_word(detail::min_word(v, false));
}

inline bool is_canonical(const Notation& v) { return canonicalize(v) == v; }

// Swaps every over/under role; the code of the reflected projection.
inline Notation mirror(const Notation& v) {
    std::vector<CrossingPair> pairs;
    pairs.reserve(v.pairs().size());
    for (const CrossingPair& c : v.pairs()) pairs.push_back({c.under, c.over});
    return Notation::from_pairs(std::move(pairs));
}

// Maximal split of 1..2n into consecutive segments so that every pair
// stays inside one segment. boundaries holds n_1 < ... < n_m = 2n.
struct SegmentDecomposition {
    std::vector<int> boundaries;
    int m = 0;

    // Distinct projections carrying this notation.
    uint64_t projections() const { return uint64_t{1} << m; }
};

inline SegmentDecomposition segment_decomposition(const Notation& v) {
    if (v.empty())
        throw domain_error("segment_decomposition: undefined for the empty notation");
    SegmentDecomposition d;
    int open = 0;
    for (int k = 1; k <= v.labels(); ++k) {
        if (v.partner_of(k) > k)
            ++open;
        else
            --open;
        if (open == 0) d.boundaries.push_back(k);
    }
    d.m = static_cast<int>(d.boundaries.size());
    return d;
}

inline bool is_prime_candidate(const Notation& v) {
    return segment_decomposition(v).m == 1;
}

// --- textual form -----------------------------------------------------
//
// Grammar (bit-exact on output): "(" digits "," digits ")" repeated,
// pairs sorted by over label; the empty notation is the token "()0".

inline std::string serialize_notation(const Notation& v) {
    if (v.empty()) return "()0";
    std::string out;
    for (const CrossingPair& c : v.pairs()) {
        out += '(';
        out += std::to_string(c.over);
        out += ',';
        out += std::to_string(c.under);
        out += ')';
    }
    return out;
}

namespace detail {

struct NotationLexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    std::string context() const {
        return std::string(text.substr(pos, std::min<size_t>(8, text.size() - pos)));
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw parse_error("malformed notation: expected a label near '" + context() + "'");
        long val = std::stol(std::string(text.substr(start, pos - start)));
        if (val <= 0 || val > 4 * kMaxCrossings)
            throw parse_error("label " + std::string(text.substr(start, pos - start)) +
                              " out of range");
        return static_cast<int>(val);
    }
};

} // namespace detail

inline Notation parse_notation(std::string_view text) {
    detail::NotationLexer lex{text};
    lex.skip_ws();
    // The empty-notation token.
    {
        std::string compact;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
        if (compact == "()0") return Notation{};
    }
    std::vector<CrossingPair> pairs;
    while (!lex.eof()) {
        if (lex.peek() != '(')
            throw parse_error("malformed notation: expected '(' near '" + lex.context() + "'");
        ++lex.pos;
        int over = lex.number();
        lex.skip_ws();
        if (lex.pos >= lex.text.size() || lex.text[lex.pos] != ',') {
            if (lex.pos < lex.text.size() && lex.text[lex.pos] == ')')
                throw parse_error("odd token count: pair " + std::to_string(pairs.size() + 1) +
                                  " has a single label " + std::to_string(over));
            throw parse_error("malformed notation: expected ',' near '" + lex.context() + "'");
        }
        ++lex.pos;
        int under = lex.number();
        lex.skip_ws();
        if (lex.pos >= lex.text.size() || lex.text[lex.pos] != ')')
            throw parse_error("malformed notation: expected ')' near '" + lex.context() + "'");
        ++lex.pos;
        if (over == under)
            throw parse_error("duplicate label " + std::to_string(over) + " within a pair");
        pairs.push_back({over, under});
    }
    if (pairs.empty())
        throw parse_error("malformed notation: empty input (the empty notation is '()0')");
    return Notation::from_pairs(std::move(pairs));
}

// Canonical mirror-identified class key: the smaller of the two canonical
// forms under the signed-word order. This is the identity used wherever
// mirror-symmetric knots are treated as equivalent.
inline Notation mirror_class_key(const Notation& v) {
    if (v.empty()) return v;
    return detail::notation_of_word(detail::min_word(v, true));
}

} // namespace knots

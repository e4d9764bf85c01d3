#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "knots/realizability.hpp"
#include "realizability_oracle.hpp"

using namespace knots;
using testutil::trefoil;

namespace {

// Library witness order: crossing 0 is the most significant bit.
uint32_t first_witness_in_search_order(int n, const std::vector<uint32_t>& witnesses) {
    uint32_t best_x = ~uint32_t{0};
    for (uint32_t bits : witnesses) {
        uint32_t x = 0;
        for (int c = 0; c < n; ++c) x |= ((bits >> c) & 1u) << (n - 1 - c);
        best_x = std::min(best_x, x);
    }
    uint32_t bits = 0;
    for (int c = 0; c < n; ++c) bits |= ((best_x >> (n - 1 - c)) & 1u) << c;
    return bits;
}

} // namespace

TEST_CASE("parity check") {
    REQUIRE(parity_check(trefoil()));
    REQUIRE_FALSE(parity_check(parse_notation("(1,3)(2,4)")));
    REQUIRE(parity_check(Notation{}));
}

TEST_CASE("interlacement graph examples") {
    auto g = interlacement_graph(trefoil());
    REQUIRE(g.n == 3);
    REQUIRE(g.edge(0, 1));
    REQUIRE(g.edge(0, 2));
    REQUIRE(g.edge(1, 2));

    auto single = interlacement_graph(parse_notation("(1,2)"));
    REQUIRE(single.degree(0) == 0);

    auto nested = interlacement_graph(parse_notation("(1,4)(3,2)"));
    REQUIRE(nested.degree(0) == 0);
    REQUIRE(nested.degree(1) == 0);
}

TEST_CASE("realizability basics") {
    auto kink = is_realizable(parse_notation("(1,2)"));
    REQUIRE(kink.realizable);
    REQUIRE(faces_of(parse_notation("(1,2)"), *kink.witness).size() == 3);

    auto t = is_realizable(trefoil());
    REQUIRE(t.realizable);
    REQUIRE(faces_of(trefoil(), *t.witness).size() == 5);

    auto e = is_realizable(Notation{});
    REQUIRE(e.realizable);

    auto bad = is_realizable(parse_notation("(1,3)(2,4)"));
    REQUIRE_FALSE(bad.realizable);
    REQUIRE(bad.reason == RealizabilityReason::parity_violation);
    REQUIRE_FALSE(bad.witness.has_value());
}

TEST_CASE("pinned regression: smallest unrealizable canonical parity-valid code") {
    // Discovered by exhaustive scan of canonical parity-valid notations in
    // signed-word order; everything with n <= 4 is realizable.
    auto fixture = parse_notation("(1,4)(2,5)(3,8)(6,9)(7,10)");
    REQUIRE(is_canonical(fixture));
    REQUIRE(parity_check(fixture));
    auto verdict = is_realizable(fixture);
    REQUIRE_FALSE(verdict.realizable);
    REQUIRE(verdict.reason == RealizabilityReason::no_planar_rotation);
}

TEST_CASE("oracle agreement: exhaustive n <= 4 plus sampled n <= 8") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& v : testutil::all_parity_valid(n)) {
            auto fast = is_realizable(v);
            auto naive = testutil::naive_realizable(v);
            REQUIRE(fast.realizable == naive.realizable);
            if (fast.realizable)
                REQUIRE(fast.witness->bits ==
                        first_witness_in_search_order(n, naive.witnesses));
        }
    }
    std::mt19937_64 rng(7101);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Notation v = testutil::random_notation(rng, n, true);
        REQUIRE(is_realizable(v).realizable == testutil::naive_realizable(v).realizable);
    }
}

TEST_CASE("verdict is orbit and mirror invariant") {
    std::mt19937_64 rng(7102);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 7);
        Notation v = testutil::random_notation(rng, n, true);
        bool r = is_realizable(v).realizable;
        int s = static_cast<int>(rng() % (2 * n));
        REQUIRE(is_realizable(relabel(v, s, (rng() & 1) != 0)).realizable == r);
        REQUIRE(is_realizable(mirror(v)).realizable == r);
    }
}

TEST_CASE("faces: every half-edge traced once, witness has n+2 faces") {
    std::mt19937_64 rng(7103);
    int witnesses_checked = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 7);
        Notation v = testutil::random_notation(rng, n, true);
        auto verdict = is_realizable(v);
        if (!verdict.realizable) continue;
        ++witnesses_checked;
        auto faces = faces_of(v, *verdict.witness);
        REQUIRE(static_cast<int>(faces.size()) == n + 2);
        size_t total = 0;
        std::vector<uint8_t> seen(static_cast<size_t>(4 * n), 0);
        for (const auto& f : faces) {
            total += f.edges.size();
            for (int d : f.edges) {
                REQUIRE_FALSE(seen[static_cast<size_t>(d)]);
                seen[static_cast<size_t>(d)] = 1;
            }
        }
        REQUIRE(total == static_cast<size_t>(4 * n));
    }
    REQUIRE(witnesses_checked > 50);
}

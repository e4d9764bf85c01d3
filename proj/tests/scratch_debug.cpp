// Debug scratch: wide sweep for moves that break coloring invariance.
#include <iostream>
#include <random>

#include "helpers.hpp"
#include "knots/moves.hpp"

using namespace knots;

int main() {
    std::mt19937_64 rng(99);
    std::vector<ColoringScheme> classic{{3, 2}, {5, 4}};
    std::vector<ColoringScheme> general{{5, 2}, {7, 2}, {7, 3}, {11, 3}, {13, 2}};
    long moves_checked = 0;
    for (int it = 0; it < 700; ++it) {
        Notation v = [&] {
            for (;;) {
                int n = 1 + static_cast<int>(rng() % 7);
                Notation c = testutil::random_notation(rng, n, true);
                if (is_realizable(c).realizable) return c;
            }
        }();
        auto fv = fingerprint(v, general);
        uint64_t c3 = count_colorings(v, classic[0]), c5 = count_colorings(v, classic[1]);
        for (const auto& mv : legal_moves(v, v.n() + 2)) {
            ++moves_checked;
            if (count_colorings(mv.result, classic[0]) != c3 ||
                count_colorings(mv.result, classic[1]) != c5 ||
                fingerprint(mv.result, general) != fv) {
                std::cout << "VIOLATION\n  v = " << serialize_notation(v) << "\n  move "
                          << serialize_move(mv.descriptor) << "\n  w = "
                          << serialize_notation(mv.result) << "\n";
                return 1;
            }
        }
    }
    std::cout << "ok, moves checked: " << moves_checked << "\n";
    return 0;
}

#include <iostream>

#include "helpers.hpp"
#include "knots/moves.hpp"

using namespace knots;

int main() {
    Notation v = parse_notation("(1,6)(2,7)(4,3)(5,12)(8,9)(10,11)");
    Notation w = parse_notation("(1,8)(4,9)(6,5)(7,16)(10,3)(11,2)(12,13)(14,15)");
    ColoringScheme s{5, 2};
    std::cout << "v count lin=" << count_colorings(v, s)
              << " brute=" << count_colorings_bruteforce(v, s) << "\n";
    std::cout << "w count lin=" << count_colorings(w, s)
              << " brute=" << count_colorings_bruteforce(w, s) << "\n";

    auto verdict = is_realizable(v);
    std::cout << "witness " << verdict.witness->bit_string() << "\n";
    for (const auto& f : faces_of(v, *verdict.witness)) {
        std::cout << "face:";
        for (int d : f.edges) std::cout << " " << (d / 2 + 1) << (d & 1 ? "-" : "+");
        std::cout << "\n";
    }
    // Which face pairs arcs 1 and 7?
    return 0;
}

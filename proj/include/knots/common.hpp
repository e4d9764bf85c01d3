#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knots {

// Largest supported crossing number. Everything downstream of the
// realizability search is exponential in n, so there is no point in
// accepting codes this library could never finish processing.
inline constexpr int kMaxCrossings = 31;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (notation grammar, table files, scheme specs).
struct parse_error : error {
    using error::error;
};

// Structurally valid input refused by an operation's precondition
// (unrealizable diagram where a projection is required, bad budgets, ...).
struct domain_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

// Floor modulus for small signed values; result in [0, m).
constexpr int mod_floor(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace knots

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasimix/int128.hpp"

namespace quasimix {

// Result of one theorem-instance check.
//
// Pass/fail is always decided internally with exact integer arithmetic on
// the integer sides; real-valued bounds (square roots and the like) get a
// 1e-9 absolute slack in the verifier's favor. lhs/rhs/slack are the same
// quantities rendered as doubles for reporting, normalized so that the
// claim is lhs <= rhs.
struct VerificationReport {
    std::string theorem;
    long long q = 0;
    int k = 0;
    std::vector<long long> sizes;
    std::uint64_t seed = 0;
    double lhs = 0;
    double rhs = 0;
    double slack = 0; // rhs - lhs
    bool pass = false;

    // Extra quantities in insertion order; values are pre-rendered JSON
    // fragments (numbers, strings, booleans) so exact 128-bit counts keep
    // all their digits. Helpers below build the fragments.
    std::vector<std::pair<std::string, std::string>> extra;

    void add_extra(const std::string& key, int128 exact);
    void add_extra(const std::string& key, long long v);
    void add_extra(const std::string& key, double v);
    void add_extra_text(const std::string& key, const std::string& v);
    void add_extra(const std::string& key, bool v);

    std::string to_json() const;
};

} // namespace quasimix

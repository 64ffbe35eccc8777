#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace quasimix {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Arithmetic in F_q for odd prime powers q = p^n.
//
// Elements are handled by canonical index: the element with coefficient
// vector (c_0, ..., c_{n-1}) over F_p (constant term first) has index
// sum c_i p^i, a bijection onto [0, q). Index 0 is zero, index 1 is one,
// index p is the adjoined root x for n > 1.
//
// All operation tables are built once at construction; a Field is immutable
// afterwards and safe to share across threads.
class Field {
public:
    static constexpr long long kHardMaxQ = 101;
    static constexpr long long kDefaultMaxQ = 27;

    // p an odd prime, n >= 1, q = p^n <= max_q. The reducing polynomial for
    // n > 1 is the lexicographically smallest monic irreducible of degree n
    // (coefficients compared from the constant term up), so a given (p, n)
    // names the same field in every run.
    static FieldPtr make(int p, int n, long long max_q = kDefaultMaxQ);

    // Accepts "7" or "3^2".
    static FieldPtr parse(std::string_view spec, long long max_q = kDefaultMaxQ);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    std::string label() const; // "7" or "3^2"

    // Monic reducing polynomial, coefficients constant-term first,
    // size n+1 with leading coefficient 1. For n == 1 this is {0, 1},
    // i.e. the polynomial x.
    const std::vector<int>& modulus() const { return modulus_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const; // throws division_by_zero for a == 0
    int pow(int a, long long e) const;

    // True iff some b has b^2 == a; zero counts as a square.
    bool is_square(int a) const { return square_[a] != 0; }

    // The quadratic character of -1: +1 when q = 1 (mod 4), -1 when
    // q = 3 (mod 4). Cross-checked against is_square(-1) at construction.
    int epsilon() const { return epsilon_; }

    // Absolute trace to F_p, returned as an integer in [0, p).
    int trace_to_prime(int a) const { return trace_[a]; }

    std::vector<int> coeffs(int a) const;
    int from_coeffs(const std::vector<int>& c) const;

private:
    Field() = default;

    int p_ = 0;
    int n_ = 0;
    int q_ = 0;
    int epsilon_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
    std::vector<int> trace_;
    std::vector<unsigned char> square_;
};

} // namespace quasimix

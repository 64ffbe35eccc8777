#include <doctest.h>

#include "quasimix/error.hpp"
#include "quasimix/field.hpp"

using namespace quasimix;

namespace {

// Test-side modulus oracle: enumerate monic degree-n polynomials in the
// constant-term-first digit order and return the first with no root in F_p.
// For degree 2 and 3, rootlessness is irreducibility.
std::vector<int> lex_least_rootless(int p, int n) {
    REQUIRE(n >= 2);
    REQUIRE(n <= 3);
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        std::vector<int> f(n + 1, 0);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[n] = 1;
        bool has_root = false;
        for (int x = 0; x < p && !has_root; ++x) {
            int v = 0;
            for (int i = n; i >= 0; --i) v = (v * x + f[i]) % p;
            has_root = v == 0;
        }
        if (!has_root) return f;
    }
    FAIL("no rootless polynomial found");
    return {};
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("make_field basics") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->q() == 5);
    CHECK(f5->label() == "5");
    CHECK(f5->modulus() == std::vector<int>{0, 1});

    auto f9 = Field::make(3, 2);
    CHECK(f9->q() == 9);
    CHECK(f9->label() == "3^2");
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1}); // x^2 + 1

    CHECK_THROWS_AS(Field::make(2, 3), parameter_error); // even p
    CHECK_THROWS_AS(Field::make(9, 1), parameter_error); // composite p
    CHECK_THROWS_AS(Field::make(7, 0), parameter_error); // n < 1
}

TEST_CASE("ceiling is configurable up to the hard cap") {
    CHECK_THROWS_AS(Field::make(7, 2), parameter_error); // 49 over the default 27
    CHECK(Field::make(7, 2, 101)->q() == 49);            // raised ceiling admits it
    CHECK_THROWS_AS(Field::make(103, 1, 1000), parameter_error); // hard cap 101
    CHECK(Field::make(5, 2)->q() == 25);                 // within the default
}

TEST_CASE("modulus is the lexicographically least irreducible") {
    for (auto [p, n] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
        auto f = Field::make(p, n);
        CHECK(f->modulus() == lex_least_rootless(p, n));
    }
    // frozen values from the oracle above
    CHECK(Field::make(5, 2)->modulus() == std::vector<int>{2, 0, 1});    // x^2 + 2
    CHECK(Field::make(3, 3)->modulus() == std::vector<int>{1, 2, 0, 1}); // x^3 + 2x + 1
}

TEST_CASE("arithmetic examples") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->mul(3, 4) == 2); // 12 mod 5

    auto f7 = Field::make(7, 1);
    CHECK(f7->inv(3) == 5); // 3 * 5 = 15 = 1

    auto f9 = Field::make(3, 2);
    const int x = 3; // index of the adjoined root
    CHECK(f9->mul(x, x) == f9->neg(f9->one())); // x^2 = -1 = 2
    CHECK(f9->neg(f9->one()) == 2);

    CHECK_THROWS_AS(f5->inv(0), division_by_zero);
    CHECK_THROWS_AS(f9->inv(0), division_by_zero);
}

TEST_CASE("field axioms exhaustively") {
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        auto f = Field::make(p, n);
        const int q = f->q();
        for (int a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q - 1) == (a == 0 ? 0 : 1));
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
    }
}

TEST_CASE("index bijection") {
    for (auto [p, n] : {std::pair{5, 1}, {3, 2}, {3, 3}}) {
        auto f = Field::make(p, n);
        for (int a = 0; a < f->q(); ++a) {
            auto c = f->coeffs(a);
            CHECK(static_cast<int>(c.size()) == n);
            CHECK(f->from_coeffs(c) == a);
        }
    }
}

TEST_CASE("is_square") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->is_square(4));
    CHECK(f5->is_square(0));

    auto f7 = Field::make(7, 1);
    CHECK_FALSE(f7->is_square(3));
    // oracle: squares mod 7
    std::vector<bool> squares(7, false);
    for (int b = 0; b < 7; ++b) squares[(b * b) % 7] = true;
    for (int a = 0; a < 7; ++a) CHECK(f7->is_square(a) == squares[a]);
}

TEST_CASE("epsilon_q") {
    CHECK(Field::make(5, 1)->epsilon() == 1);
    CHECK(Field::make(7, 1)->epsilon() == -1);
    CHECK(Field::make(3, 2)->epsilon() == 1); // 9 = 1 mod 4
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}}) {
        auto f = Field::make(p, n);
        CHECK(f->epsilon() == (f->q() % 4 == 1 ? 1 : -1));
        CHECK(f->is_square(f->neg(f->one())) == (f->epsilon() == 1));
    }
}

TEST_CASE("absolute trace") {
    auto f7 = Field::make(7, 1);
    for (int a = 0; a < 7; ++a) CHECK(f7->trace_to_prime(a) == a);

    auto f9 = Field::make(3, 2);
    for (int a = 0; a < 9; ++a) {
        // Tr(a) = a + a^3 must land in the prime subfield
        int expect = f9->add(a, f9->pow(a, 3));
        CHECK(expect < 3);
        CHECK(f9->trace_to_prime(a) == expect);
    }
    // trace is onto F_p: a nonzero value exists
    bool nonzero = false;
    for (int a = 0; a < 9; ++a) nonzero |= f9->trace_to_prime(a) != 0;
    CHECK(nonzero);
}

TEST_CASE("parse field specs") {
    CHECK(Field::parse("7")->q() == 7);
    CHECK(Field::parse("3^2")->q() == 9);
    CHECK(Field::parse("3^2")->label() == "3^2");
    CHECK_THROWS_AS(Field::parse("junk"), parameter_error);
    CHECK_THROWS_AS(Field::parse("4"), parameter_error);
    CHECK_THROWS_AS(Field::parse("3^"), parameter_error);
}

} // TEST_SUITE

#include <doctest.h>

#include "quasimix/error.hpp"
#include "quasimix/prng.hpp"
#include "quasimix/rigid_motion.hpp"

using namespace quasimix;

TEST_SUITE("rigid_motion") {

TEST_CASE("so2 enumeration") {
    auto f3 = Field::make(3, 1);
    auto rots = so2_enumerate(*f3);
    REQUIRE(rots.size() == 4);
    CHECK(rots[0] == Rotation{0, 1});
    CHECK(rots[1] == Rotation{0, 2});
    CHECK(rots[2] == Rotation{1, 0});
    CHECK(rots[3] == Rotation{2, 0});

    CHECK(so2_enumerate(*Field::make(5, 1)).size() == 4);
    CHECK(so2_enumerate(*Field::make(7, 1)).size() == 8);
    CHECK(so2_enumerate(*Field::make(3, 2)).size() == 8);
    CHECK(so2_enumerate(*Field::make(11, 1)).size() == 12);
    CHECK(so2_enumerate(*Field::make(13, 1)).size() == 12);
}

TEST_CASE("generator") {
    auto f3 = Field::make(3, 1);
    auto rots3 = so2_enumerate(*f3);
    Rotation gamma = find_generator(*f3, rots3);
    CHECK(gamma == Rotation{0, 1});
    // gamma: (0,1) -> (2,0) -> (0,2) -> (1,0) = id
    Rotation g2 = rotation_mul(*f3, gamma, gamma);
    CHECK(g2 == Rotation{2, 0});
    CHECK(rotation_mul(*f3, g2, gamma) == Rotation{0, 2});
    CHECK(rotation_mul(*f3, rotation_mul(*f3, g2, gamma), gamma) == rotation_identity(*f3));

    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        auto f = Field::make(p, n);
        auto rots = so2_enumerate(*f);
        Rotation g = find_generator(*f, rots);
        CHECK(rotation_order(*f, g) == static_cast<int>(rots.size()));
        CHECK_FALSE(g == rotation_identity(*f)); // identity has order 1
    }
}

TEST_CASE("rotation group is abelian and closed") {
    auto f = Field::make(5, 1);
    auto rg = build_rotation_group(*f);
    for (const Rotation& r : rg.elements)
        for (const Rotation& s : rg.elements) {
            Rotation rs = rotation_mul(*f, r, s);
            CHECK(rg.exponent_of(rs) >= 0);
            CHECK(rs == rotation_mul(*f, s, r));
        }
}

TEST_CASE("lemma: 1 - h invertible off the identity") {
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}}) {
        auto f = Field::make(p, n);
        auto rg = build_rotation_group(*f);
        for (size_t j = 1; j < rg.elements.size(); ++j) {
            int two = f->add(f->one(), f->one());
            int det = f->mul(two, f->sub(f->one(), rg.elements[j].a));
            CHECK(det != f->zero());
        }
    }
}

TEST_CASE("group sizes") {
    CHECK(RigidMotionGroup::build(Field::make(3, 1)).group().size() == 36);
    CHECK(RigidMotionGroup::build(Field::make(5, 1)).group().size() == 100);
    CHECK(RigidMotionGroup::build(Field::make(7, 1)).group().size() == 392);
    CHECK(RigidMotionGroup::build(Field::make(3, 2)).group().size() == 648);
    CHECK_THROWS_AS(RigidMotionGroup::build(Field::make(7, 1), 100), resource_error);
}

TEST_CASE("apply_motion") {
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const SdpGroup& g = g0.group();

    const Point x{1, 2};
    CHECK(g0.apply_motion(g.element(g.identity()), x) == x);

    // pure translation
    const int z = g0.point_index({2, 1});
    CHECK(g0.apply_motion({z, 0}, x) == Point{0, 0}); // (1,2) + (2,1) = (0,0) mod 3

    // composition law, exhaustive at q = 3
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            for (int pt = 0; pt < g0.point_count(); ++pt)
                CHECK(g0.apply_motion(g.mul(a, b), pt) ==
                      g0.apply_motion(a, g0.apply_motion(b, pt)));
}

TEST_CASE("norms") {
    auto f5 = Field::make(5, 1);
    CHECK(norm_pair(*f5, {1, 2}, {1, 2}) == 0);
    CHECK(norm_pair(*f5, {0, 0}, {1, 2}) == 0); // 1 + 4 = 0: isotropic pair

    // motion invariance, exhaustive at q = 3
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const Field& f3 = g0.field();
    for (int gi = 0; gi < g0.group().size(); ++gi)
        for (int xi = 0; xi < 9; ++xi)
            for (int yi = 0; yi < 9; ++yi) {
                Point gx = g0.point(g0.apply_motion(gi, xi));
                Point gy = g0.point(g0.apply_motion(gi, yi));
                CHECK(norm_pair(f3, gx, gy) == norm_pair(f3, g0.point(xi), g0.point(yi)));
            }

    // sampled at q = 9
    auto g9 = RigidMotionGroup::build(Field::make(3, 2));
    const Field& f9 = g9.field();
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        int gi = static_cast<int>(rng.next_below(g9.group().size()));
        int xi = static_cast<int>(rng.next_below(81));
        int yi = static_cast<int>(rng.next_below(81));
        Point gx = g9.point(g9.apply_motion(gi, xi));
        Point gy = g9.point(g9.apply_motion(gi, yi));
        CHECK(norm_pair(f9, gx, gy) == norm_pair(f9, g9.point(xi), g9.point(yi)));
    }
}

TEST_CASE("circles") {
    CHECK(circle(*Field::make(7, 1), 1).size() == 8);
    CHECK(circle(*Field::make(5, 1), 1).size() == 4);
    CHECK(circle(*Field::make(7, 1), 0).size() == 1); // epsilon = -1: origin only
    CHECK(circle(*Field::make(5, 1), 0).size() == 9); // epsilon = +1: two lines, 2q - 1

    for (auto [p, n] : {std::pair{5, 1}, {7, 1}, {3, 2}}) {
        auto f = Field::make(p, n);
        const int expected = f->q() - f->epsilon();
        for (int t = 1; t < f->q(); ++t)
            CHECK(static_cast<int>(circle(*f, t).size()) == expected);
    }
}

TEST_CASE("simple transitivity on circles") {
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        auto f = Field::make(p, n);
        auto rg = build_rotation_group(*f);
        for (int t = 1; t < f->q(); ++t) {
            auto pts = circle(*f, t);
            for (const Point& w1 : pts)
                for (const Point& w2 : pts) {
                    int matches = 0;
                    for (const Rotation& h : rg.elements)
                        if (rotate(*f, h, w1) == w2) ++matches;
                    CHECK(matches == 1);
                }
        }
    }
}

} // TEST_SUITE

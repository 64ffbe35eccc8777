#include <doctest.h>

#include <algorithm>
#include <set>

#include "quasimix/counting.hpp"
#include "quasimix/error.hpp"
#include "quasimix/rigid_motion.hpp"
#include "quasimix/semidirect.hpp"
#include "quasimix/subset.hpp"
#include "support/oracles.hpp"

using namespace quasimix;

namespace {

// Z_7 x| Z_3 with phi_h : z -> 2^h z, a nonabelian group of order 21 used to
// keep the generic layer honest away from G0.
SdpGroup make_order21() {
    FiniteGroup n;
    n.size = 7;
    n.identity = 0;
    n.mul = [](int a, int b) { return (a + b) % 7; };
    n.inv = [](int a) { return (7 - a) % 7; };
    FiniteGroup h;
    h.size = 3;
    h.identity = 0;
    h.mul = [](int a, int b) { return (a + b) % 3; };
    h.inv = [](int a) { return (3 - a) % 3; };
    GroupAction phi;
    phi.apply = [](int hh, int z) {
        int m = 1;
        for (int i = 0; i < hh; ++i) m = (m * 2) % 7;
        return (m * z) % 7;
    };
    return SdpGroup(std::move(n), std::move(h), std::move(phi));
}

std::multiset<size_t> class_size_multiset(const std::vector<std::vector<int>>& classes) {
    std::multiset<size_t> out;
    for (const auto& c : classes) out.insert(c.size());
    return out;
}

} // namespace

TEST_SUITE("semidirect") {

TEST_CASE("group law and element indexing") {
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const SdpGroup& g = g0.group();
    CHECK(g.size() == 36);
    CHECK(g.n_size() == 9);
    CHECK(g.h_size() == 4);

    for (int i = 0; i < g.size(); ++i) {
        SdpElement e = g.element(i);
        CHECK(g.index_of(e) == i);
        CHECK(e.dot == g.dot(i));
        CHECK(e.ddot == g.ddot(i));
    }
    // the normal copy of N sits in the first |N| indices
    for (int z = 0; z < g.n_size(); ++z) CHECK(g.dot(z) == 0);
}

TEST_CASE("axioms hold exhaustively") {
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const SdpGroup& g = g0.group();
    FiniteGroup as_table;
    as_table.size = g.size();
    as_table.identity = g.identity();
    as_table.mul = [&g](int a, int b) { return g.mul(a, b); };
    as_table.inv = [&g](int a) { return g.inv(a); };
    validate_group_axioms(as_table);

    SdpGroup g21 = make_order21();
    FiniteGroup t21;
    t21.size = g21.size();
    t21.identity = g21.identity();
    t21.mul = [&g21](int a, int b) { return g21.mul(a, b); };
    t21.inv = [&g21](int a) { return g21.inv(a); };
    validate_group_axioms(t21);
    // order 21 with trivial center off identity: nonabelian sanity
    bool commutes_everywhere = true;
    for (int a = 0; a < g21.size(); ++a)
        for (int b = 0; b < g21.size(); ++b)
            commutes_everywhere &= g21.mul(a, b) == g21.mul(b, a);
    CHECK_FALSE(commutes_everywhere);
}

TEST_CASE("inverses two-sided, exhaustive") {
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const SdpGroup& g = g0.group();
    for (int i = 0; i < g.size(); ++i) {
        CHECK(g.mul(i, g.inv(i)) == g.identity());
        CHECK(g.mul(g.inv(i), i) == g.identity());
    }
    CHECK(g.inv(g.identity()) == g.identity());
    // (z, 1)^-1 = (z^-1, 1)
    for (int z = 0; z < g.n_size(); ++z)
        CHECK(g.inv(g.index_of({z, 0})) == g.index_of({g.n_inv(z), 0}));
}

TEST_CASE("semidirect law against explicit matrix arithmetic") {
    auto field = Field::make(3, 1);
    auto g0 = RigidMotionGroup::build(field);
    const SdpGroup& g = g0.group();
    const Field& f = *field;
    // ((1,0), r) ((0,1), s) = ((1,0) + r(0,1), rs), with r applied as the
    // explicit 2x2 matrix [[a, -b], [b, a]]
    const int z1 = g0.point_index({1, 0});
    const int z2 = g0.point_index({0, 1});
    for (int r = 0; r < g.h_size(); ++r) {
        Rotation rot = g0.rotations().elements[r];
        for (int s = 0; s < g.h_size(); ++s) {
            int got = g.mul(g.index_of({z1, r}), g.index_of({z2, s}));
            Point rz2{f.sub(f.mul(rot.a, 0), f.mul(rot.b, 1)),
                      f.add(f.mul(rot.b, 0), f.mul(rot.a, 1))};
            Point sum{f.add(1, rz2.x1), f.add(0, rz2.x2)};
            CHECK(got == g.index_of({g0.point_index(sum), (r + s) % g.h_size()}));
        }
    }
}

TEST_CASE("dot projection is a homomorphism onto H") {
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const SdpGroup& g = g0.group();
    for (int a = 0; a < g.size(); ++a) {
        for (int b = 0; b < g.size(); ++b)
            CHECK(g.dot(g.mul(a, b)) == g.h_mul(g.dot(a), g.dot(b)));
        CHECK(g.dot(g.inv(a)) == g.h_inv(g.dot(a)));
    }
    CHECK(g.dot(g.identity()) == 0);
    // fibers partition G into |H| slices of size |N|
    std::vector<int> fiber(g.h_size(), 0);
    for (int i = 0; i < g.size(); ++i) ++fiber[g.dot(i)];
    for (int c : fiber) CHECK(c == g.n_size());
}

TEST_CASE("normal copy of N") {
    auto g0 = RigidMotionGroup::build(Field::make(3, 1));
    const SdpGroup& g = g0.group();
    for (int c = 0; c < g.size(); ++c)
        for (int z = 0; z < g.n_size(); ++z) {
            int conj = g.mul(g.mul(c, g.index_of({z, 0})), g.inv(c));
            CHECK(g.dot(conj) == 0);
        }
}

TEST_CASE("conjugacy classes of G0") {
    auto g5 = RigidMotionGroup::build(Field::make(5, 1));
    auto classes5 = conjugacy_classes(g5.group());
    CHECK(classes5.size() == 10);
    CHECK(class_size_multiset(classes5) ==
          std::multiset<size_t>{1, 4, 4, 4, 4, 4, 4, 25, 25, 25});

    auto g3 = RigidMotionGroup::build(Field::make(3, 1));
    auto classes3 = conjugacy_classes(g3.group());
    CHECK(classes3.size() == 6);
    CHECK(class_size_multiset(classes3) == std::multiset<size_t>{1, 4, 4, 9, 9, 9});

    // against the definitional oracle
    auto brute = oracle::brute_conjugacy_partition(g3.group());
    REQUIRE(brute.size() == classes3.size());
    for (size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == classes3[i]);

    long long total = 0;
    for (const auto& c : classes5) {
        CHECK(100 % c.size() == 0); // class sizes divide |G|
        total += static_cast<long long>(c.size());
    }
    CHECK(total == 100);
}

TEST_CASE("conjugacy classes with trivial N are singletons") {
    FiniteGroup n;
    n.size = 1;
    n.identity = 0;
    n.mul = [](int, int) { return 0; };
    n.inv = [](int) { return 0; };
    FiniteGroup h;
    h.size = 5;
    h.identity = 0;
    h.mul = [](int a, int b) { return (a + b) % 5; };
    h.inv = [](int a) { return (5 - a) % 5; };
    GroupAction phi;
    phi.apply = [](int, int z) { return z; };
    SdpGroup g(std::move(n), std::move(h), std::move(phi));
    auto classes = conjugacy_classes(g);
    CHECK(classes.size() == 5);
    for (const auto& c : classes) CHECK(c.size() == 1);
}

TEST_CASE("conjugacy budget") {
    auto g3 = RigidMotionGroup::build(Field::make(3, 1));
    CHECK_THROWS_AS(conjugacy_classes(g3.group(), 100), resource_error);
}

TEST_CASE("is_subgroup") {
    auto g7 = RigidMotionGroup::build(Field::make(7, 1));
    const SdpGroup& g = g7.group();

    GroupSubset trivial(g);
    trivial.add(g.identity());
    CHECK(is_subgroup(trivial));

    GroupSubset chi = example1_subset(g7, 2, 4);
    CHECK(chi.size() == 4 * 49);
    CHECK(is_subgroup(chi));

    GroupSubset bad(g);
    bad.add(g.identity() + 1);
    CHECK_FALSE(is_subgroup(bad));

    GroupSubset empty(g);
    CHECK_FALSE(is_subgroup(empty));
}

} // TEST_SUITE

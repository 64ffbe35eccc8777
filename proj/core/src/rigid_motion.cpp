#include "quasimix/rigid_motion.hpp"

#include <algorithm>
#include <memory>

#include "quasimix/error.hpp"

namespace quasimix {

Rotation rotation_identity(const Field& f) { return {f.one(), f.zero()}; }

Rotation rotation_mul(const Field& f, Rotation r, Rotation s) {
    return {f.sub(f.mul(r.a, s.a), f.mul(r.b, s.b)),
            f.add(f.mul(r.a, s.b), f.mul(r.b, s.a))};
}

Rotation rotation_inv(const Field& f, Rotation r) {
    // (a + bi)^-1 = a - bi when a^2 + b^2 = 1.
    return {r.a, f.neg(r.b)};
}

Point rotate(const Field& f, Rotation r, Point x) {
    return {f.sub(f.mul(r.a, x.x1), f.mul(r.b, x.x2)),
            f.add(f.mul(r.b, x.x1), f.mul(r.a, x.x2))};
}

int rotation_order(const Field& f, Rotation r) {
    Rotation id = rotation_identity(f);
    Rotation cur = r;
    int order = 1;
    while (!(cur == id)) {
        cur = rotation_mul(f, cur, r);
        ++order;
        if (order > f.q() + 1) throw structural_error("rotation order exceeds group bound");
    }
    return order;
}

std::vector<Rotation> so2_enumerate(const Field& f) {
    std::vector<Rotation> out;
    for (int a = 0; a < f.q(); ++a)
        for (int b = 0; b < f.q(); ++b)
            if (f.add(f.mul(a, a), f.mul(b, b)) == f.one()) out.push_back({a, b});
    // already ascending in (idx(a), idx(b)) by loop order
    int expected = f.q() - f.epsilon();
    if (static_cast<int>(out.size()) != expected)
        throw structural_error("SO2 enumeration found " + std::to_string(out.size()) +
                               " elements, expected " + std::to_string(expected));
    return out;
}

Rotation find_generator(const Field& f, const std::vector<Rotation>& so2) {
    const int order = static_cast<int>(so2.size());
    for (const Rotation& r : so2)
        if (rotation_order(f, r) == order) return r;
    throw structural_error("SO2(F_" + f.label() + ") has no generator of order " +
                           std::to_string(order) + "; the group should be cyclic");
}

int RotationGroup::exponent_of(Rotation r) const {
    for (size_t j = 0; j < elements.size(); ++j)
        if (elements[j] == r) return static_cast<int>(j);
    return -1;
}

RotationGroup build_rotation_group(const Field& f) {
    std::vector<Rotation> sorted = so2_enumerate(f);
    RotationGroup rg;
    rg.generator = find_generator(f, sorted);
    rg.elements.reserve(sorted.size());
    Rotation cur = rotation_identity(f);
    for (size_t j = 0; j < sorted.size(); ++j) {
        rg.elements.push_back(cur);
        cur = rotation_mul(f, cur, rg.generator);
    }
    if (!(cur == rotation_identity(f)))
        throw structural_error("generator powers do not close after Q steps");
    // Lemma guard: det(1 - h) = 2(1 - a) must be nonzero off the identity.
    for (size_t j = 1; j < rg.elements.size(); ++j) {
        int det = f.mul(f.add(f.one(), f.one()), f.sub(f.one(), rg.elements[j].a));
        if (det == f.zero())
            throw structural_error("1 - h is singular for a non-identity rotation");
    }
    return rg;
}

int norm_pair(const Field& f, Point x, Point y) {
    int d1 = f.sub(x.x1, y.x1);
    int d2 = f.sub(x.x2, y.x2);
    return f.add(f.mul(d1, d1), f.mul(d2, d2));
}

std::vector<Point> circle(const Field& f, int t) {
    std::vector<Point> out;
    Point origin{f.zero(), f.zero()};
    for (int x1 = 0; x1 < f.q(); ++x1)
        for (int x2 = 0; x2 < f.q(); ++x2)
            if (norm_pair(f, {x1, x2}, origin) == t) out.push_back({x1, x2});
    return out;
}

RigidMotionGroup::RigidMotionGroup(FieldPtr f, RotationGroup rots, SdpGroup grp)
    : field_(std::move(f)), rotations_(std::move(rots)), group_(std::move(grp)) {}

RigidMotionGroup RigidMotionGroup::build(FieldPtr f, long long max_group_size) {
    if (!f) throw parameter_error("null field");
    RotationGroup rots = build_rotation_group(*f);
    const int q = f->q();
    const int Q = rots.order();
    const long long g_size = static_cast<long long>(q) * q * Q;
    if (g_size > max_group_size)
        throw resource_error("|G0| = " + std::to_string(g_size) + " exceeds the ceiling " +
                             std::to_string(max_group_size));

    FiniteGroup n;
    n.size = q * q;
    n.identity = 0;
    n.mul = [f, q](int za, int zb) {
        return f->add(za / q, zb / q) * q + f->add(za % q, zb % q);
    };
    n.inv = [f, q](int z) { return f->neg(z / q) * q + f->neg(z % q); };
    n.label = [f, q](int z) {
        return "(" + std::to_string(z / q) + "," + std::to_string(z % q) + ")";
    };

    FiniteGroup h;
    h.size = Q;
    h.identity = 0;
    h.mul = [Q](int j1, int j2) { return (j1 + j2) % Q; };
    h.inv = [Q](int j) { return (Q - j) % Q; };
    h.label = [](int j) { return "g^" + std::to_string(j); };

    auto elems = std::make_shared<std::vector<Rotation>>(rots.elements);
    GroupAction phi;
    phi.apply = [f, q, elems](int j, int z) {
        Point w = rotate(*f, (*elems)[j], {z / q, z % q});
        return w.x1 * q + w.x2;
    };

    SdpGroup grp(std::move(n), std::move(h), std::move(phi));
    return RigidMotionGroup(std::move(f), std::move(rots), std::move(grp));
}

Point RigidMotionGroup::apply_motion(SdpElement g, Point x) const {
    Point rx = rotate(*field_, rotations_.elements[g.dot], x);
    return {field_->add(point(g.ddot).x1, rx.x1), field_->add(point(g.ddot).x2, rx.x2)};
}

int RigidMotionGroup::apply_motion(int gidx, int zidx) const {
    const SdpElement g = group_.element(gidx);
    const int rotated = group_.act(g.dot, zidx);
    return group_.n_mul(g.ddot, rotated);
}

} // namespace quasimix

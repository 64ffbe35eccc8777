#pragma once

#include <vector>

#include "quasimix/field.hpp"
#include "quasimix/semidirect.hpp"

namespace quasimix {

// A point of the plane F_q^2, by field-element indices.
// Canonical point index: idx(z) = idx(x1) * q + idx(x2).
struct Point {
    int x1 = 0;
    int x2 = 0;
    bool operator==(const Point&) const = default;
};

// A special-orthogonal matrix [[a, -b], [b, a]] with a^2 + b^2 = 1,
// stored by its two field-element indices. Composition is complex
// multiplication of a + bi.
struct Rotation {
    int a = 0;
    int b = 0;
    bool operator==(const Rotation&) const = default;
};

Rotation rotation_identity(const Field& f);
Rotation rotation_mul(const Field& f, Rotation r, Rotation s);
Rotation rotation_inv(const Field& f, Rotation r);
Point rotate(const Field& f, Rotation r, Point x);
int rotation_order(const Field& f, Rotation r);

// All rotations with a^2 + b^2 = 1, sorted by (idx(a), idx(b)).
// There are exactly q - epsilon_q of them.
std::vector<Rotation> so2_enumerate(const Field& f);

// The smallest element (in the enumeration order above) of full
// multiplicative order; throws structural_error if none exists.
Rotation find_generator(const Field& f, const std::vector<Rotation>& so2);

// SO_2(F_q) listed in generator-power order: elements[j] = gamma^j. Storing
// rotations by exponent makes the H-part of a group element the exponent j
// itself, which the degree-1 character formula indexes directly.
struct RotationGroup {
    std::vector<Rotation> elements;
    Rotation generator;
    int order() const { return static_cast<int>(elements.size()); }
    int exponent_of(Rotation r) const; // -1 if absent
};

RotationGroup build_rotation_group(const Field& f);

// The quadratic form ||x - y|| = (x1-y1)^2 + (x2-y2)^2, as a field element.
// Invariant under every rigid motion.
int norm_pair(const Field& f, Point x, Point y);

// {w : ||w - 0|| = t}; for t != 0 this has exactly q - epsilon_q points.
// Sorted by point index.
std::vector<Point> circle(const Field& f, int t);

// G0 = F_q^2 x| SO_2(F_q), acting on the plane by x -> z + hx.
class RigidMotionGroup {
public:
    static constexpr long long kDefaultCeiling = 2'000'000;

    // Throws resource_error when q^2 (q - epsilon_q) exceeds the ceiling.
    static RigidMotionGroup build(FieldPtr f, long long max_group_size = kDefaultCeiling);

    RigidMotionGroup(const RigidMotionGroup&) = delete;
    RigidMotionGroup& operator=(const RigidMotionGroup&) = delete;
    RigidMotionGroup(RigidMotionGroup&&) = default;

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const SdpGroup& group() const { return group_; }
    const RotationGroup& rotations() const { return rotations_; }

    int q() const { return field_->q(); }
    int epsilon() const { return field_->epsilon(); }
    int rotation_count() const { return rotations_.order(); } // Q = q - epsilon_q

    int point_index(Point z) const { return z.x1 * q() + z.x2; }
    Point point(int idx) const { return {idx / q(), idx % q()}; }
    int point_count() const { return q() * q(); }

    // phi_{gamma^j}(z), by point index.
    int rotate_point(int exponent, int zidx) const { return group_.act(exponent, zidx); }

    Point apply_motion(SdpElement g, Point x) const;
    int apply_motion(int gidx, int zidx) const;

private:
    RigidMotionGroup(FieldPtr f, RotationGroup rots, SdpGroup grp);

    FieldPtr field_;
    RotationGroup rotations_;
    SdpGroup group_;
};

} // namespace quasimix

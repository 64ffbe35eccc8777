#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasimix/counting.hpp"
#include "quasimix/rigid_motion.hpp"

namespace quasimix {

// A subset of the plane F_q^2 as a bitset over point indices.
class PointSet {
public:
    explicit PointSet(FieldPtr f);

    static PointSet full(FieldPtr f);
    static PointSet of(FieldPtr f, const std::vector<int>& point_indices);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int universe_size() const { return field_->q() * field_->q(); }

    long long size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int idx) const {
        return (bits_[static_cast<size_t>(idx) >> 6] >> (idx & 63)) & 1u;
    }
    void add(int idx);
    std::vector<int> indices() const;

private:
    FieldPtr field_;
    std::vector<std::uint64_t> bits_;
    long long count_ = 0;
};

struct Segment {
    Point x;
    Point y;
    int length = 0; // ||x - y||, as a field element index
};

// Ordered pairs (x, y) in P x P with ||x - y|| = t. Summed over every t in
// F_q this gives |P|^2.
long long count_segments(const RigidMotionGroup& g0, const PointSet& p, int t);

// n_t for every t in [0, q).
std::vector<long long> segment_histogram(const RigidMotionGroup& g0, const PointSet& p);

// The unique motion g with g x = u0 and g y = v0, found by scanning the
// rotation group for the h mapping x - y onto u0 - v0 (simple transitivity
// on nonzero circles makes it unique). Requires both segments to have the
// same nonzero length.
SdpElement segment_motion(const RigidMotionGroup& g0, Point x, Point y, Point u0, Point v0);

// All motions carrying a length-t segment of P onto the anchor. Distinct
// segments give distinct motions, so |X_t| = n_t.
struct MotionSet {
    GroupSubset motions;
    Segment anchor;
};

// Anchor defaults to the lexicographically first length-t segment of P x P
// (ordered by (point index of x, point index of y)). Returns nullopt when
// P x P has no segment of length t -- an empty result, not an error.
std::optional<MotionSet> build_Xt(const RigidMotionGroup& g0, const PointSet& p, int t);
std::optional<MotionSet> build_Xt(const RigidMotionGroup& g0, const PointSet& p, int t,
                                  const Segment& anchor);

// Exact assertions behind the distance-growth theorem at one (P, t):
//   (i)  N_2_dot(X_t) <= |X_t|^3 |P|
//   (ii) the product-growth instance on (X_t, X_t) with the true D
// plus report-only context: the Iosevich-Rudnev ratio n_t q / |P|^2, the
// empirical exponent log|X_t X_t| / log|X_t|, and the constant-free
// comparison of |X_t X_t| against min{q |P|, |P|^4 / q^4}.
VerificationReport verify_distance_growth(const RigidMotionGroup& g0, const PointSet& p, int t,
                                          const CountOptions& opts = {});

PointSet random_point_set(const RigidMotionGroup& g0, double density, std::uint64_t seed);

// JSON files {"q": ..., "points": [...]} over the canonical point indexing.
PointSet load_point_set(const std::string& path, FieldPtr f);
void save_point_set(const PointSet& p, const std::string& path);

} // namespace quasimix

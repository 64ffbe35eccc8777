#include "quasimix/distance.hpp"

#include <cmath>
#include <fstream>

#include "quasimix/error.hpp"
#include "quasimix/json_writer.hpp"
#include "quasimix/prng.hpp"

#include <nlohmann/json.hpp>

namespace quasimix {

PointSet::PointSet(FieldPtr f)
    : field_(std::move(f)) {
    if (!field_) throw parameter_error("null field");
    bits_.assign((static_cast<size_t>(universe_size()) + 63) / 64, 0);
}

PointSet PointSet::full(FieldPtr f) {
    PointSet p(std::move(f));
    for (int i = 0; i < p.universe_size(); ++i) p.add(i);
    return p;
}

PointSet PointSet::of(FieldPtr f, const std::vector<int>& point_indices) {
    PointSet p(std::move(f));
    for (int i : point_indices) p.add(i);
    return p;
}

void PointSet::add(int idx) {
    if (idx < 0 || idx >= universe_size())
        throw parameter_error("point index " + std::to_string(idx) + " out of range");
    std::uint64_t& word = bits_[static_cast<size_t>(idx) >> 6];
    std::uint64_t mask = 1ULL << (idx & 63);
    if (!(word & mask)) {
        word |= mask;
        ++count_;
    }
}

std::vector<int> PointSet::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count_));
    for (int i = 0; i < universe_size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

namespace {

void check_field(const RigidMotionGroup& g0, const PointSet& p) {
    if (g0.field().label() != p.field().label())
        throw parameter_error("point set and group live over different fields");
}

} // namespace

long long count_segments(const RigidMotionGroup& g0, const PointSet& p, int t) {
    check_field(g0, p);
    const Field& f = g0.field();
    long long n = 0;
    const std::vector<int> pts = p.indices();
    for (int xi : pts) {
        const Point x = g0.point(xi);
        for (int yi : pts)
            if (norm_pair(f, x, g0.point(yi)) == t) ++n;
    }
    return n;
}

std::vector<long long> segment_histogram(const RigidMotionGroup& g0, const PointSet& p) {
    check_field(g0, p);
    const Field& f = g0.field();
    std::vector<long long> hist(f.q(), 0);
    const std::vector<int> pts = p.indices();
    for (int xi : pts) {
        const Point x = g0.point(xi);
        for (int yi : pts) ++hist[norm_pair(f, x, g0.point(yi))];
    }
    return hist;
}

SdpElement segment_motion(const RigidMotionGroup& g0, Point x, Point y, Point u0, Point v0) {
    const Field& f = g0.field();
    const int t = norm_pair(f, x, y);
    if (t != norm_pair(f, u0, v0))
        throw parameter_error("segments have different lengths");
    if (t == f.zero())
        throw parameter_error("length-zero segments do not determine a unique motion");

    const Point d{f.sub(x.x1, y.x1), f.sub(x.x2, y.x2)};
    const Point target{f.sub(u0.x1, v0.x1), f.sub(u0.x2, v0.x2)};
    const RotationGroup& rots = g0.rotations();
    for (int j = 0; j < rots.order(); ++j) {
        if (rotate(f, rots.elements[j], d) == target) {
            const Point rx = rotate(f, rots.elements[j], x);
            const Point z{f.sub(u0.x1, rx.x1), f.sub(u0.x2, rx.x2)};
            const SdpElement g{g0.point_index(z), j};
            // defining property, rechecked unconditionally
            if (!(g0.apply_motion(g, x) == u0) || !(g0.apply_motion(g, y) == v0))
                throw structural_error("segment motion fails its defining property");
            return g;
        }
    }
    throw structural_error("no rotation maps the segment direction onto the anchor direction");
}

std::optional<MotionSet> build_Xt(const RigidMotionGroup& g0, const PointSet& p, int t) {
    check_field(g0, p);
    if (t == 0) throw parameter_error("t must be a nonzero field element");
    const Field& f = g0.field();
    const std::vector<int> pts = p.indices();
    for (int xi : pts) {
        const Point x = g0.point(xi);
        for (int yi : pts)
            if (norm_pair(f, x, g0.point(yi)) == t)
                return build_Xt(g0, p, t, Segment{x, g0.point(yi), t});
    }
    return std::nullopt;
}

std::optional<MotionSet> build_Xt(const RigidMotionGroup& g0, const PointSet& p, int t,
                                  const Segment& anchor) {
    check_field(g0, p);
    if (t == 0) throw parameter_error("t must be a nonzero field element");
    const Field& f = g0.field();
    if (norm_pair(f, anchor.x, anchor.y) != t) throw parameter_error("anchor has the wrong length");
    if (!p.contains(g0.point_index(anchor.x)) || !p.contains(g0.point_index(anchor.y)))
        throw parameter_error("anchor endpoints must belong to the point set");

    GroupSubset motions(g0.group());
    long long segments = 0;
    const std::vector<int> pts = p.indices();
    for (int xi : pts) {
        const Point x = g0.point(xi);
        for (int yi : pts) {
            const Point y = g0.point(yi);
            if (norm_pair(f, x, y) != t) continue;
            ++segments;
            const SdpElement g = segment_motion(g0, x, y, anchor.x, anchor.y);
            motions.add(g0.group().index_of(g));
        }
    }
    if (segments == 0) return std::nullopt;
    if (motions.size() != segments)
        throw structural_error("distinct segments collided on one motion; |X_t| != n_t");
    return MotionSet{std::move(motions), anchor};
}

VerificationReport verify_distance_growth(const RigidMotionGroup& g0, const PointSet& p, int t,
                                          const CountOptions& opts) {
    check_field(g0, p);
    if (t == 0) throw parameter_error("t must be a nonzero field element");
    const long long n_t = count_segments(g0, p, t);
    const long long q = g0.q();
    const long long d_min = g0.rotation_count();

    VerificationReport rep;
    rep.theorem = "distance";
    rep.q = q;
    rep.k = 2;
    rep.sizes = {p.size()};
    rep.add_extra("t", static_cast<long long>(t));
    rep.add_extra("n_t", n_t);

    std::optional<MotionSet> xt = build_Xt(g0, p, t);
    if (!xt) {
        rep.pass = true;
        rep.add_extra("Xt_size", static_cast<long long>(0));
        rep.add_extra_text("note", "no length-t segment in P x P");
        return rep;
    }
    const GroupSubset& motions = xt->motions;
    if (motions.size() != n_t) throw structural_error("|X_t| != n_t");

    // (i) the dot-coincidence count is at most |X_t|^3 |P|
    const int128 n2_dot = count_Nk_dot({motions, motions});
    const int128 n2_cap = ipow(static_cast<int128>(motions.size()), 3) * p.size();
    const bool proof_ok = n2_dot <= n2_cap;

    // (ii) the product-growth instance on (X_t, X_t)
    VerificationReport growth = verify_product_growth({motions, motions}, d_min, opts);

    const GroupSubset xtxt = product_set({motions, motions}, opts);

    rep.lhs = static_cast<double>(to_long_double(n2_dot));
    rep.rhs = static_cast<double>(to_long_double(n2_cap));
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = proof_ok && growth.pass;
    rep.add_extra("Xt_size", static_cast<long long>(motions.size()));
    rep.add_extra("XtXt_size", static_cast<long long>(xtxt.size()));
    rep.add_extra("N2_dot", n2_dot);
    rep.add_extra("N2_dot_cap", n2_cap);
    rep.add_extra("growth_pass", growth.pass);
    rep.add_extra("growth_lhs", growth.lhs);

    // report-only context; the asymptotic statements carry unspecified
    // constants, so none of these are asserted
    const double psize = static_cast<double>(p.size());
    rep.add_extra("ratio_iosevich_rudnev",
                  psize == 0 ? 0.0 : static_cast<double>(n_t) * q / (psize * psize));
    if (motions.size() > 1)
        rep.add_extra("empirical_exponent",
                      std::log(static_cast<double>(xtxt.size())) /
                          std::log(static_cast<double>(motions.size())));
    else
        rep.extra.emplace_back("empirical_exponent", "null");
    const double free_bound =
        std::min(static_cast<double>(q) * psize,
                 std::pow(psize, 4) / std::pow(static_cast<double>(q), 4));
    rep.add_extra("constant_free_bound", free_bound);
    rep.add_extra("constant_free_holds", static_cast<double>(xtxt.size()) >= free_bound);
    return rep;
}

PointSet random_point_set(const RigidMotionGroup& g0, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw parameter_error("density must lie in [0, 1]");
    SplitMix64 rng(seed);
    PointSet p(g0.field_ptr());
    for (int i = 0; i < p.universe_size(); ++i)
        if (rng.next_unit() < density) p.add(i);
    return p;
}

PointSet load_point_set(const std::string& path, FieldPtr f) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open point-set file '" + path + "'");
    nlohmann::json j;
    in >> j;
    if (!j.contains("q") || !j.contains("points"))
        throw parameter_error("point-set file must contain \"q\" and \"points\"");
    if (j["q"].get<long long>() != f->q())
        throw parameter_error("point-set file is for q = " + j["q"].dump() +
                              ", expected q = " + std::to_string(f->q()));
    PointSet p(std::move(f));
    for (const auto& v : j["points"]) p.add(v.get<int>());
    return p;
}

void save_point_set(const PointSet& p, const std::string& path) {
    JsonWriter w;
    w.begin_object();
    w.field("q", static_cast<long long>(p.field().q()));
    w.field("field", p.field().label());
    w.key("points").begin_array();
    for (int i : p.indices()) w.value(i);
    w.end_array();
    w.end_object();
    std::ofstream out(path);
    if (!out) throw parameter_error("cannot write point-set file '" + path + "'");
    out << w.str() << "\n";
}

} // namespace quasimix

#include "quasimix/repr.hpp"

#include <cmath>
#include <numbers>

#include "quasimix/error.hpp"
#include "quasimix/json_writer.hpp"

namespace quasimix {

std::string IrrepLabel::to_string() const {
    return (kind == Kind::type_one ? "I:" : "II:") + std::to_string(param);
}

Irrep::Irrep(const RigidMotionGroup& g0, IrrepLabel label, int degree)
    : g0_(&g0), label_(label), degree_(degree) {}

Irrep Irrep::make_type_one(const RigidMotionGroup& g0, int r) {
    const int Q = g0.rotation_count();
    if (r < 0 || r >= Q) throw parameter_error("type I index r out of [0, Q)");
    Irrep rho(g0, {IrrepLabel::Kind::type_one, r}, 1);
    rho.unit_roots_.resize(Q);
    for (int j = 0; j < Q; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(r) * j / Q;
        rho.unit_roots_[j] = std::polar(1.0, angle);
    }
    return rho;
}

Irrep Irrep::make_type_two(const RigidMotionGroup& g0, int a_point_index) {
    if (a_point_index == 0)
        throw parameter_error("the zero dual label induces type I content, not a type II irrep");
    const Field& f = g0.field();
    const int q = f.q();
    if (a_point_index < 0 || a_point_index >= q * q)
        throw parameter_error("dual label point index out of range");
    Irrep rho(g0, {IrrepLabel::Kind::type_two, a_point_index}, g0.rotation_count());
    const Point a = g0.point(a_point_index);
    rho.psi_.resize(static_cast<size_t>(q) * q);
    for (int z = 0; z < q * q; ++z) {
        const Point zp = g0.point(z);
        const int dot = f.add(f.mul(a.x1, zp.x1), f.mul(a.x2, zp.x2));
        const int t = f.trace_to_prime(dot);
        rho.psi_[z] = std::polar(1.0, 2.0 * std::numbers::pi * t / f.p());
    }
    return rho;
}

ComplexMatrix Irrep::matrix(int g) const {
    const SdpGroup& grp = g0_->group();
    const int z = grp.ddot(g);
    const int s = grp.dot(g);
    if (label_.kind == IrrepLabel::Kind::type_one) {
        ComplexMatrix m(1, 1);
        m.at(0, 0) = unit_roots_[s];
        return m;
    }
    const int Q = degree_;
    ComplexMatrix m(Q, Q);
    for (int n = 0; n < Q; ++n) {
        const int row = (s + n) % Q;
        m.at(row, n) = psi_[g0_->rotate_point((Q - row) % Q, z)];
    }
    return m;
}

cplx Irrep::character(int g) const {
    const SdpGroup& grp = g0_->group();
    const int z = grp.ddot(g);
    const int s = grp.dot(g);
    if (label_.kind == IrrepLabel::Kind::type_one) return unit_roots_[s];
    if (s != 0) return 0.0;
    const int Q = degree_;
    cplx t = 0;
    for (int m = 0; m < Q; ++m) t += psi_[g0_->rotate_point((Q - m) % Q, z)];
    return t;
}

void Irrep::accumulate_scaled(int g, cplx c, ComplexMatrix& acc) const {
    const SdpGroup& grp = g0_->group();
    const int z = grp.ddot(g);
    const int s = grp.dot(g);
    if (label_.kind == IrrepLabel::Kind::type_one) {
        acc.at(0, 0) += c * unit_roots_[s];
        return;
    }
    const int Q = degree_;
    for (int n = 0; n < Q; ++n) {
        const int row = (s + n) % Q;
        acc.at(row, n) += c * psi_[g0_->rotate_point((Q - row) % Q, z)];
    }
}

cplx Irrep::hs_against(int g, const ComplexMatrix& a) const {
    const SdpGroup& grp = g0_->group();
    const int z = grp.ddot(g);
    const int s = grp.dot(g);
    if (label_.kind == IrrepLabel::Kind::type_one)
        return a.at(0, 0) * std::conj(unit_roots_[s]);
    const int Q = degree_;
    cplx acc = 0;
    for (int n = 0; n < Q; ++n) {
        const int row = (s + n) % Q;
        acc += a.at(row, n) * std::conj(psi_[g0_->rotate_point((Q - row) % Q, z)]);
    }
    return acc;
}

std::vector<int> dual_orbits(const RigidMotionGroup& g0) {
    const int points = g0.point_count();
    const int Q = g0.rotation_count();
    std::vector<char> seen(points, 0);
    std::vector<int> reps;
    seen[0] = 1; // the zero label is excluded
    for (int a = 1; a < points; ++a) {
        if (seen[a]) continue;
        reps.push_back(a);
        int orbit_size = 0;
        for (int j = 0; j < Q; ++j) {
            int w = g0.rotate_point(j, a);
            if (!seen[w]) {
                seen[w] = 1;
                ++orbit_size;
            }
        }
        if (orbit_size != Q)
            throw structural_error("dual orbit of label " + std::to_string(a) +
                                   " has size " + std::to_string(orbit_size) +
                                   ", expected Q = " + std::to_string(Q));
    }
    const int expected = g0.q() + g0.epsilon();
    if (static_cast<int>(reps.size()) != expected)
        throw structural_error("found " + std::to_string(reps.size()) +
                               " dual orbits, expected Q' = " + std::to_string(expected));
    return reps;
}

IrrepType classify_type(const Irrep& rho, double tol) {
    const RigidMotionGroup& g0 = rho.group();
    const Field& f = g0.field();
    // F_p-basis translations (alpha^i, 0) and (0, alpha^i); alpha^i has
    // field-element index p^i.
    int unit = 1;
    for (int i = 0; i < f.n(); ++i) {
        for (int z : {g0.point_index({unit, f.zero()}), g0.point_index({f.zero(), unit})}) {
            const int g = g0.group().index_of({z, 0});
            if (!rho.matrix(g).is_identity(tol)) return IrrepType::type_two;
        }
        unit *= f.p();
    }
    return IrrepType::type_one;
}

IrrepCensus::IrrepCensus(const RigidMotionGroup& g0) : g0_(&g0) {
    const int Q = g0.rotation_count();
    for (int r = 0; r < Q; ++r) irreps_.push_back(Irrep::make_type_one(g0, r));
    type_one_count_ = Q;
    orbit_reps_ = dual_orbits(g0);
    for (int a : orbit_reps_) irreps_.push_back(Irrep::make_type_two(g0, a));

    const long long order = g0.group().size();
    if (sum_degree_squares() != order)
        throw structural_error("irrep census mismatch: sum of degree squares " +
                               std::to_string(sum_degree_squares()) + " != |G0| = " +
                               std::to_string(order));
}

std::optional<int> IrrepCensus::quasirandom_degree() const {
    std::optional<int> d;
    for (const Irrep& rho : irreps_)
        if (rho.is_type_two() && (!d || rho.degree() < *d)) d = rho.degree();
    return d;
}

long long IrrepCensus::sum_degree_squares() const {
    long long s = 0;
    for (const Irrep& rho : irreps_) s += static_cast<long long>(rho.degree()) * rho.degree();
    return s;
}

cplx CharacterTable::row_inner(int i, int j, long long group_size) const {
    cplx s = 0;
    for (size_t c = 0; c < class_reps.size(); ++c)
        s += static_cast<double>(class_sizes[c]) * values[i][c] * std::conj(values[j][c]);
    return s / static_cast<double>(group_size);
}

std::string CharacterTable::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("irreps").begin_array();
    for (const IrrepLabel& l : rows) w.value(l.to_string());
    w.end_array();
    w.key("class_representatives").begin_array();
    for (int r : class_reps) w.value(r);
    w.end_array();
    w.key("class_sizes").begin_array();
    for (long long s : class_sizes) w.value(s);
    w.end_array();
    w.key("characters").begin_array();
    for (const auto& row : values) {
        w.begin_array();
        for (const cplx& v : row) {
            w.begin_array();
            w.value(v.real());
            w.value(v.imag());
            w.end_array();
        }
        w.end_array();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

CharacterTable character_table(const IrrepCensus& census) {
    const RigidMotionGroup& g0 = census.group();
    CharacterTable table;
    auto classes = conjugacy_classes(g0.group());
    for (const auto& cls : classes) {
        table.class_reps.push_back(cls.front());
        table.class_sizes.push_back(static_cast<long long>(cls.size()));
    }
    for (const Irrep& rho : census.irreps()) {
        table.rows.push_back(rho.label());
        std::vector<cplx> row;
        row.reserve(classes.size());
        for (int rep : table.class_reps) row.push_back(rho.character(rep));
        table.values.push_back(std::move(row));
    }
    return table;
}

} // namespace quasimix

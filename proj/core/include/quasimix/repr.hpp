#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quasimix/complex_matrix.hpp"
#include "quasimix/rigid_motion.hpp"

namespace quasimix {

struct IrrepLabel {
    enum class Kind { type_one, type_two };
    Kind kind = Kind::type_one;
    // Type I: the character exponent r in [0, Q).
    // Type II: the point index of the dual-orbit representative a != 0.
    int param = 0;

    std::string to_string() const;
    bool operator==(const IrrepLabel&) const = default;
};

// One irreducible unitary representation of G0.
//
// Type I (degree 1):   rho_r((z, gamma^j)) = exp(2 pi i r j / Q).
// Type II (degree Q):  induced from the additive character
//   psi_a(z) = exp(2 pi i Tr(a.z) / p) of the normal plane, along the coset
//   transversal {(0, gamma^m)}. For g = (z, gamma^s) the matrix has
//   entry [m, n] = psi_a(gamma^{-m} z) when m = s + n (mod Q), else 0 -
//   a generalized permutation matrix, so every value is a root of unity
//   and the matrix is unitary.
class Irrep {
public:
    static Irrep make_type_one(const RigidMotionGroup& g0, int r);
    static Irrep make_type_two(const RigidMotionGroup& g0, int a_point_index);

    const IrrepLabel& label() const { return label_; }
    int degree() const { return degree_; }
    bool is_type_two() const { return label_.kind == IrrepLabel::Kind::type_two; }
    const RigidMotionGroup& group() const { return *g0_; }

    ComplexMatrix matrix(int g) const;
    cplx character(int g) const;

    // acc += c * rho(g); walks only the nonzero entries.
    void accumulate_scaled(int g, cplx c, ComplexMatrix& acc) const;
    // <a, rho(g)>_HS, again touching only the nonzero entries.
    cplx hs_against(int g, const ComplexMatrix& a) const;

private:
    Irrep(const RigidMotionGroup& g0, IrrepLabel label, int degree);

    const RigidMotionGroup* g0_;
    IrrepLabel label_;
    int degree_;
    std::vector<cplx> unit_roots_; // type I: e^{2 pi i r j / Q} by exponent j
    std::vector<cplx> psi_;        // type II: psi_a by point index
};

// H0-orbit representatives of the dual labels a in F_q^2 \ {0} under
// a -> h^T a; since every h^T is again a rotation, these are the plain
// rotation orbits. Exactly Q' = q + epsilon_q orbits, each of size Q,
// covering the punctured plane; the representative is the smallest point
// index in its orbit, returned ascending.
std::vector<int> dual_orbits(const RigidMotionGroup& g0);

enum class IrrepType { type_one, type_two };

// Decides the type by evaluating rho on translations by an F_p-basis of the
// plane. (For extension fields the two unit vectors alone do not generate
// the additive group, so all 2n basis translations are inspected.)
IrrepType classify_type(const Irrep& rho, double tol = 1e-9);

// The complete census: Q type I irreps (r = 0..Q-1) followed by Q' type II
// irreps in ascending representative order. Construction verifies the
// degree-square identity sum d^2 = |G0| and throws structural_error on any
// mismatch.
class IrrepCensus {
public:
    explicit IrrepCensus(const RigidMotionGroup& g0);

    const RigidMotionGroup& group() const { return *g0_; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    int count() const { return static_cast<int>(irreps_.size()); }
    int type_one_count() const { return type_one_count_; }
    int type_two_count() const { return count() - type_one_count_; }
    const std::vector<int>& dual_orbit_reps() const { return orbit_reps_; }

    // Minimum type II degree; disengaged when there are no type II irreps
    // (the group is then quasirandom on N to every degree).
    std::optional<int> quasirandom_degree() const;

    long long sum_degree_squares() const;

private:
    const RigidMotionGroup* g0_;
    std::vector<Irrep> irreps_;
    std::vector<int> orbit_reps_;
    int type_one_count_ = 0;
};

struct CharacterTable {
    std::vector<IrrepLabel> rows;
    std::vector<int> class_reps;
    std::vector<long long> class_sizes;
    std::vector<std::vector<cplx>> values; // [row][class]

    // <chi_i, chi_j> = (1/|G|) sum_c size_c chi_i(rep_c) conj(chi_j(rep_c))
    cplx row_inner(int i, int j, long long group_size) const;
    std::string to_json() const;
};

CharacterTable character_table(const IrrepCensus& census);

} // namespace quasimix

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace quasimix {

class GroupSubset;

// A finite group on indices [0, size): multiplication, inversion, identity,
// and an optional printable label per element.
struct FiniteGroup {
    int size = 0;
    int identity = 0;
    std::function<int(int, int)> mul;
    std::function<int(int)> inv;
    std::function<std::string(int)> label; // may be empty
};

// Checks identity and inverse laws in full and associativity up to
// max_steps triples (full when size^3 fits the budget, an evenly strided
// sample otherwise). Throws structural_error on any violation.
void validate_group_axioms(const FiniteGroup& g, long long max_steps = 100'000'000);

// phi: H -> Aut(N), supplied as apply(h, z) = phi_h(z).
struct GroupAction {
    std::function<int(int, int)> apply;
};

// One element of N x| H, as the pair of component indices. The paper-style
// reading: ddot is the N-part, dot the H-part.
struct SdpElement {
    int ddot = 0;
    int dot = 0;
    bool operator==(const SdpElement&) const = default;
};

// The semidirect product G = N x| H with the law
//   (z1, h1)(z2, h2) = (z1 * phi_{h1}(z2), h1 h2).
//
// Canonical element index: idx(g) = dot * |N| + ddot, so the normal copy of
// N occupies indices [0, |N|) and every H-fiber is a contiguous index range.
//
// Component operations are flattened into lookup tables where small enough;
// the group never materializes a |G| x |G| table. Immutable after
// construction, safe for concurrent reads.
class SdpGroup {
public:
    SdpGroup(FiniteGroup n, FiniteGroup h, GroupAction phi, bool validate_action = true);

    int size() const { return size_; }
    int n_size() const { return n_size_; }
    int h_size() const { return h_size_; }
    int identity() const { return identity_; }

    int index_of(SdpElement e) const { return e.dot * n_size_ + e.ddot; }
    SdpElement element(int g) const { return {g % n_size_, g / n_size_}; }
    int dot(int g) const { return g / n_size_; }
    int ddot(int g) const { return g % n_size_; }

    int mul(int g1, int g2) const {
        const int z1 = g1 % n_size_, h1 = g1 / n_size_;
        const int z2 = g2 % n_size_, h2 = g2 / n_size_;
        return h_mul(h1, h2) * n_size_ + n_mul(z1, act(h1, z2));
    }
    int inv(int g) const { return inv_[g]; }

    SdpElement mul(SdpElement a, SdpElement b) const { return element(mul(index_of(a), index_of(b))); }
    SdpElement inv(SdpElement a) const { return element(inv_[index_of(a)]); }

    int n_mul(int a, int b) const {
        return n_mul_table_.empty() ? n_.mul(a, b) : n_mul_table_[static_cast<size_t>(a) * n_size_ + b];
    }
    int n_inv(int a) const { return n_inv_table_[a]; }
    int h_mul(int a, int b) const { return h_mul_table_[static_cast<size_t>(a) * h_size_ + b]; }
    int h_inv(int a) const { return h_inv_table_[a]; }
    int act(int h, int z) const { return act_table_[static_cast<size_t>(h) * n_size_ + z]; }

    std::string label(int g) const;

    const FiniteGroup& n_group() const { return n_; }
    const FiniteGroup& h_group() const { return h_; }

private:
    FiniteGroup n_, h_;
    GroupAction phi_;
    int n_size_ = 0, h_size_ = 0, size_ = 0, identity_ = 0;
    std::vector<int> n_mul_table_; // empty if |N|^2 exceeds the table cap
    std::vector<int> n_inv_table_;
    std::vector<int> h_mul_table_;
    std::vector<int> h_inv_table_;
    std::vector<int> act_table_; // |H| x |N|
    std::vector<int> inv_;       // |G|
};

// Exact partition of [0, |G|) into conjugacy classes by orbit closure,
// classes ordered by their smallest element, elements ascending within a
// class. Cost is |G|^2 conjugations; throws resource_error above max_steps.
std::vector<std::vector<int>> conjugacy_classes(const SdpGroup& g, long long max_steps = 400'000'000);

// True iff x is nonempty and closed under multiplication and inverses.
bool is_subgroup(const GroupSubset& x);

} // namespace quasimix

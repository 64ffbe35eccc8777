#include "quasimix/semidirect.hpp"

#include <algorithm>

#include "quasimix/error.hpp"
#include "quasimix/subset.hpp"

namespace quasimix {

namespace {
// Component tables beyond this many entries stay function-backed.
constexpr long long kTableCap = 1LL << 25;
} // namespace

void validate_group_axioms(const FiniteGroup& g, long long max_steps) {
    if (g.size <= 0 || !g.mul || !g.inv) throw structural_error("group table incomplete");
    for (int a = 0; a < g.size; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
            throw structural_error("identity law fails at element " + std::to_string(a));
        int ai = g.inv(a);
        if (ai < 0 || ai >= g.size || g.mul(a, ai) != g.identity || g.mul(ai, a) != g.identity)
            throw structural_error("inverse law fails at element " + std::to_string(a));
    }
    long long n = g.size;
    long long triples = n * n * n;
    long long stride = triples <= max_steps ? 1 : (triples + max_steps - 1) / max_steps;
    long long t = 0;
    for (long long code = 0; code < triples; code += stride, ++t) {
        int a = static_cast<int>(code % n);
        int b = static_cast<int>((code / n) % n);
        int c = static_cast<int>(code / (n * n));
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw structural_error("associativity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

SdpGroup::SdpGroup(FiniteGroup n, FiniteGroup h, GroupAction phi, bool validate_action)
    : n_(std::move(n)), h_(std::move(h)), phi_(std::move(phi)) {
    if (n_.size <= 0 || h_.size <= 0) throw parameter_error("component groups must be nonempty");
    if (!n_.mul || !n_.inv || !h_.mul || !h_.inv || !phi_.apply)
        throw parameter_error("component group tables incomplete");
    n_size_ = n_.size;
    h_size_ = h_.size;
    size_ = n_size_ * h_size_;
    identity_ = h_.identity * n_size_ + n_.identity;

    const long long nn = static_cast<long long>(n_size_) * n_size_;
    if (nn <= kTableCap) {
        n_mul_table_.resize(nn);
        for (int a = 0; a < n_size_; ++a)
            for (int b = 0; b < n_size_; ++b)
                n_mul_table_[static_cast<size_t>(a) * n_size_ + b] = n_.mul(a, b);
    }
    n_inv_table_.resize(n_size_);
    for (int a = 0; a < n_size_; ++a) n_inv_table_[a] = n_.inv(a);

    h_mul_table_.resize(static_cast<size_t>(h_size_) * h_size_);
    h_inv_table_.resize(h_size_);
    for (int a = 0; a < h_size_; ++a) {
        h_inv_table_[a] = h_.inv(a);
        for (int b = 0; b < h_size_; ++b)
            h_mul_table_[static_cast<size_t>(a) * h_size_ + b] = h_.mul(a, b);
    }

    act_table_.resize(static_cast<size_t>(h_size_) * n_size_);
    for (int hh = 0; hh < h_size_; ++hh)
        for (int z = 0; z < n_size_; ++z)
            act_table_[static_cast<size_t>(hh) * n_size_ + z] = phi_.apply(hh, z);

    if (validate_action) {
        // phi_id = id and each phi_h a bijection.
        std::vector<char> hit(n_size_);
        for (int hh = 0; hh < h_size_; ++hh) {
            std::fill(hit.begin(), hit.end(), 0);
            for (int z = 0; z < n_size_; ++z) {
                int w = act(hh, z);
                if (w < 0 || w >= n_size_ || hit[w]) throw structural_error("phi_h is not a bijection of N");
                hit[w] = 1;
            }
        }
        for (int z = 0; z < n_size_; ++z)
            if (act(h_.identity, z) != z) throw structural_error("phi at the identity of H is not the identity map");

        // phi is a homomorphism H -> Aut(N).
        for (int h1 = 0; h1 < h_size_; ++h1)
            for (int h2 = 0; h2 < h_size_; ++h2) {
                int h12 = h_mul(h1, h2);
                for (int z = 0; z < n_size_; z += 1 + n_size_ / 64) // strided; full for small N
                    if (act(h12, z) != act(h1, act(h2, z)))
                        throw structural_error("phi is not a homomorphism");
            }

        // each phi_h respects the N multiplication (strided sweep).
        const int zstride = 1 + n_size_ / 128;
        for (int hh = 0; hh < h_size_; ++hh)
            for (int z1 = 0; z1 < n_size_; z1 += zstride)
                for (int z2 = 0; z2 < n_size_; z2 += zstride)
                    if (act(hh, n_mul(z1, z2)) != n_mul(act(hh, z1), act(hh, z2)))
                        throw structural_error("phi_h is not an automorphism of N");
    }

    // (z, h)^-1 = (phi_{h^-1}(z^-1), h^-1)
    inv_.resize(size_);
    for (int g = 0; g < size_; ++g) {
        const int z = g % n_size_, hh = g / n_size_;
        const int hi = h_inv(hh);
        inv_[g] = hi * n_size_ + act(hi, n_inv(z));
    }
}

std::string SdpGroup::label(int g) const {
    const int z = g % n_size_, hh = g / n_size_;
    std::string zs = n_.label ? n_.label(z) : std::to_string(z);
    std::string hs = h_.label ? h_.label(hh) : std::to_string(hh);
    return "(" + zs + ", " + hs + ")";
}

std::vector<std::vector<int>> conjugacy_classes(const SdpGroup& g, long long max_steps) {
    const long long size = g.size();
    if (size * size > max_steps)
        throw resource_error("conjugacy enumeration needs " + std::to_string(size * size) +
                             " steps, budget is " + std::to_string(max_steps));
    std::vector<char> seen(size, 0);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < size; ++x) {
        if (seen[x]) continue;
        std::vector<char> in_class(size, 0);
        for (int c = 0; c < size; ++c) {
            int y = g.mul(g.mul(c, x), g.inv(c));
            in_class[y] = 1;
        }
        std::vector<int> cls;
        for (int y = 0; y < size; ++y)
            if (in_class[y]) {
                cls.push_back(y);
                seen[y] = 1;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool is_subgroup(const GroupSubset& x) {
    if (x.empty()) return false;
    const SdpGroup& g = x.group();
    const std::vector<int> elems = x.indices();
    for (int a : elems)
        if (!x.contains(g.inv(a))) return false;
    for (int a : elems)
        for (int b : elems)
            if (!x.contains(g.mul(a, b))) return false;
    return true;
}

} // namespace quasimix

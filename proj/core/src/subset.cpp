#include "quasimix/subset.hpp"

#include "quasimix/error.hpp"

namespace quasimix {

GroupSubset::GroupSubset(const SdpGroup& g)
    : group_(&g), bits_((static_cast<size_t>(g.size()) + 63) / 64, 0) {}

GroupSubset GroupSubset::full(const SdpGroup& g) {
    GroupSubset s(g);
    for (int i = 0; i < g.size(); ++i) s.add(i);
    return s;
}

GroupSubset GroupSubset::of(const SdpGroup& g, const std::vector<int>& indices) {
    GroupSubset s(g);
    for (int i : indices) s.add(i);
    return s;
}

void GroupSubset::add(int idx) {
    if (idx < 0 || idx >= group_->size())
        throw parameter_error("subset element index " + std::to_string(idx) + " out of range");
    std::uint64_t& word = bits_[static_cast<size_t>(idx) >> 6];
    std::uint64_t mask = 1ULL << (idx & 63);
    if (!(word & mask)) {
        word |= mask;
        ++count_;
    }
}

void GroupSubset::remove(int idx) {
    if (idx < 0 || idx >= group_->size())
        throw parameter_error("subset element index " + std::to_string(idx) + " out of range");
    std::uint64_t& word = bits_[static_cast<size_t>(idx) >> 6];
    std::uint64_t mask = 1ULL << (idx & 63);
    if (word & mask) {
        word &= ~mask;
        --count_;
    }
}

std::vector<int> GroupSubset::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count_));
    for (int i = 0; i < group_->size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

} // namespace quasimix

#pragma once

#include <cstdint>
#include <vector>

#include "quasimix/semidirect.hpp"

namespace quasimix {

// A subset of a fixed SdpGroup as a bitset over canonical element indices,
// with exact cardinality maintained alongside.
class GroupSubset {
public:
    explicit GroupSubset(const SdpGroup& g);

    static GroupSubset full(const SdpGroup& g);
    static GroupSubset of(const SdpGroup& g, const std::vector<int>& indices);

    const SdpGroup& group() const { return *group_; }

    long long size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int idx) const {
        return (bits_[static_cast<size_t>(idx) >> 6] >> (idx & 63)) & 1u;
    }

    void add(int idx);
    void remove(int idx);

    // Ascending element indices.
    std::vector<int> indices() const;

    bool operator==(const GroupSubset& other) const {
        return group_ == other.group_ && bits_ == other.bits_;
    }

private:
    const SdpGroup* group_;
    std::vector<std::uint64_t> bits_;
    long long count_ = 0;
};

} // namespace quasimix

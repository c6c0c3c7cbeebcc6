#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace polyjoin {

/// Faces are bitmasks over positions in a ground set's universe order.
using Mask = std::uint64_t;

constexpr int kMaxGroundSize = 64;

inline int mask_size(Mask m) { return std::popcount(m); }

/// Bit i set <=> position i.
inline Mask bit(int i) { return Mask{1} << i; }

/**
 * Ordered list of distinct vertex ids, optionally partitioned into consecutive
 * blocks (the blocks carry the product structure of joins; two ground sets
 * compare equal iff their universes agree, blocks are advisory).
 */
class GroundSet {
public:
    GroundSet() = default;

    explicit GroundSet(std::vector<int> universe, std::vector<int> block_sizes = {})
        : universe_(std::move(universe)), block_sizes_(std::move(block_sizes)) {
        if (static_cast<int>(universe_.size()) > kMaxGroundSize)
            throw resource_limit_error("ground set exceeds " + std::to_string(kMaxGroundSize) + " vertices");
        std::set<int> seen(universe_.begin(), universe_.end());
        if (seen.size() != universe_.size())
            throw invalid_input_error("ground set has repeated vertex ids");
        if (!block_sizes_.empty()) {
            long long total = 0;
            for (int s : block_sizes_) {
                if (s < 0) throw invalid_input_error("negative block size");
                total += s;
            }
            if (total != static_cast<long long>(universe_.size()))
                throw invalid_input_error("block sizes do not partition the universe");
        }
    }

    /// Ground set {1, ..., n}.
    static GroundSet range(int n) {
        if (n < 0) throw invalid_input_error("negative ground size");
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 1);
        return GroundSet(std::move(ids));
    }

    /// Ground set {1, ..., n} split into consecutive blocks of the given sizes.
    static GroundSet blocked(const std::vector<int>& sizes) {
        long long n = 0;
        for (int s : sizes) n += s;
        GroundSet g = range(static_cast<int>(n));
        g.block_sizes_ = sizes;
        return g;
    }

    const std::vector<int>& universe() const { return universe_; }
    int size() const { return static_cast<int>(universe_.size()); }

    bool has_blocks() const { return !block_sizes_.empty(); }
    const std::vector<int>& block_sizes() const { return block_sizes_; }
    int block_count() const { return static_cast<int>(block_sizes_.size()); }

    /// Positions covered by block k (0-based k).
    Mask block_mask(int k) const {
        if (k < 0 || k >= block_count()) throw invalid_input_error("block index out of range");
        int start = 0;
        for (int i = 0; i < k; ++i) start += block_sizes_[i];
        Mask m = 0;
        for (int i = 0; i < block_sizes_[k]; ++i) m |= bit(start + i);
        return m;
    }

    std::vector<int> block_ids(int k) const { return ids_of(block_mask(k)); }

    int index_of(int id) const {
        for (int i = 0; i < size(); ++i)
            if (universe_[i] == id) return i;
        throw invalid_input_error("vertex id " + std::to_string(id) + " not in ground set");
    }

    bool contains_id(int id) const {
        return std::find(universe_.begin(), universe_.end(), id) != universe_.end();
    }

    Mask mask_of(const std::vector<int>& ids) const {
        Mask m = 0;
        for (int id : ids) {
            Mask b = bit(index_of(id));
            if (m & b) throw invalid_input_error("repeated vertex id in face");
            m |= b;
        }
        return m;
    }

    std::vector<int> ids_of(Mask m) const {
        std::vector<int> ids;
        for (int i = 0; i < size(); ++i)
            if (m & bit(i)) ids.push_back(universe_[i]);
        return ids;
    }

    Mask full_mask() const {
        return size() == kMaxGroundSize ? ~Mask{0} : (bit(size()) - 1);
    }

    /// Sub-ground-set spanned by the positions of `m`, keeping universe order.
    GroundSet subset(Mask m) const { return GroundSet(ids_of(m)); }

    /// Ground set formed by appending `other`'s universe (ids must be disjoint).
    GroundSet concatenated_with(const GroundSet& other) const {
        std::vector<int> ids = universe_;
        for (int id : other.universe_) {
            if (contains_id(id))
                throw invalid_input_error("ground sets are not disjoint at id " + std::to_string(id));
            ids.push_back(id);
        }
        return GroundSet(std::move(ids));
    }

    bool operator==(const GroundSet& o) const { return universe_ == o.universe_; }
    bool operator!=(const GroundSet& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        for (int i = 0; i < size(); ++i) os << (i ? " " : "") << universe_[i];
        os << "}";
        return os.str();
    }

private:
    std::vector<int> universe_;
    std::vector<int> block_sizes_;
};

} // namespace polyjoin

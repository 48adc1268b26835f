#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hplus {

/// Which class of non-crossing partitions spans the fixed vectors:
/// O pairings (O_n^+), H even blocks (H_n^+), S all blocks (S_n^+).
enum class Flavor { O, H, S };

Flavor parse_flavor(std::string_view text);
char flavor_letter(Flavor f);

/// Entries i_1..i_k in {1..n}.
using MultiIndex = std::vector<int>;

/// A partition of {1..k}. Blocks are sorted ascending and ordered by their
/// minimum, so equal partitions are structurally equal.
class SetPartition {
public:
    using Block = std::vector<int>;

    /// Validates that `blocks` partition {1..k}; canonicalizes the order.
    /// Throws std::invalid_argument.
    SetPartition(int k, std::vector<Block> blocks);

    static SetPartition singletons(int k);
    static SetPartition one_block(int k);
    /// Points sharing a label share a block; labels are arbitrary integers.
    static SetPartition from_labels(std::span<const int> labels);

    int size() const { return k_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    /// Zero-based block index of each point, in canonical block order.
    const std::vector<int>& block_of() const { return block_of_; }

    /// JSON-style text, e.g. [[1,2],[3,4]].
    std::string str() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.k_ == b.k_ && a.blocks_ == b.blocks_;
    }
    /// Canonical order: size, then more blocks first, then the block lists.
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = b.blocks_.size() <=> a.blocks_.size(); c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    SetPartition() = default;

    int k_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> block_of_;
};

bool is_noncrossing(const SetPartition& p);

/// Block-size predicate of the flavor (pairs, even sizes, or anything).
bool admits(Flavor f, const SetPartition& p);

/// Every non-crossing partition of {1..k} admitted by the flavor, ordered by
/// descending block count, then lexicographically on the canonical block list.
std::vector<SetPartition> enumerate_nc(int k, Flavor f);

/// Finest common coarsening. Throws std::invalid_argument on size mismatch.
SetPartition join(const SetPartition& p, const SetPartition& q);

/// Number of blocks of the join, without materializing it.
int join_block_count(const SetPartition& p, const SetPartition& q);

inline int block_count(const SetPartition& p) { return p.block_count(); }

/// 1 when i is constant on every block of p, else 0.
int delta(const SetPartition& p, std::span<const int> i);

}  // namespace hplus

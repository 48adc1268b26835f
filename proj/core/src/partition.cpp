#include "hplus/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hplus {

Flavor parse_flavor(std::string_view text) {
    if (text == "o" || text == "O") return Flavor::O;
    if (text == "h" || text == "H") return Flavor::H;
    if (text == "s" || text == "S") return Flavor::S;
    throw std::invalid_argument("unknown flavor '" + std::string(text) + "' (expected o, h or s)");
}

char flavor_letter(Flavor f) {
    switch (f) {
        case Flavor::O: return 'o';
        case Flavor::H: return 'h';
        case Flavor::S: return 's';
    }
    return '?';
}

SetPartition::SetPartition(int k, std::vector<Block> blocks) : k_(k), blocks_(std::move(blocks)) {
    if (k < 0) throw std::invalid_argument("SetPartition: negative size");
    std::vector<int> seen(static_cast<std::size_t>(k), 0);
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > k) throw std::invalid_argument("SetPartition: point outside {1..k}");
            if (seen[static_cast<std::size_t>(x - 1)]++) throw std::invalid_argument("SetPartition: blocks overlap");
        }
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0) throw std::invalid_argument("SetPartition: blocks do not cover {1..k}");
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    block_of_.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
        for (int x : blocks_[bi]) block_of_[static_cast<std::size_t>(x - 1)] = static_cast<int>(bi);
}

SetPartition SetPartition::singletons(int k) {
    std::vector<Block> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i});
    return SetPartition(k, std::move(blocks));
}

SetPartition SetPartition::one_block(int k) {
    if (k == 0) return SetPartition(0, {});
    Block b(static_cast<std::size_t>(k));
    std::iota(b.begin(), b.end(), 1);
    return SetPartition(k, {b});
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
    std::map<int, Block> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(static_cast<int>(i) + 1);
    std::vector<Block> blocks;
    blocks.reserve(by_label.size());
    for (auto& [label, b] : by_label) blocks.push_back(std::move(b));
    return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

std::string SetPartition::str() const {
    std::string out = "[";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += ",";
        out += "[";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(blocks_[b][i]);
        }
        out += "]";
    }
    return out + "]";
}

bool is_noncrossing(const SetPartition& p) {
    // Crossing iff some point strictly between two consecutive elements a < c
    // of a block lies in a block that reaches outside [a, c].
    const auto& of = p.block_of();
    for (const auto& block : p.blocks()) {
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            const int a = block[i];
            const int c = block[i + 1];
            for (int b = a + 1; b < c; ++b) {
                const auto& other = p.blocks()[static_cast<std::size_t>(of[static_cast<std::size_t>(b - 1)])];
                if (other.front() < a || other.back() > c) return false;
            }
        }
    }
    return true;
}

namespace {

bool size_allowed(Flavor f, std::size_t size) {
    switch (f) {
        case Flavor::O: return size == 2;
        case Flavor::H: return size % 2 == 0;
        case Flavor::S: return size >= 1;
    }
    return false;
}

// Recursive first-block placement. `labels[x]` records the minimum point of
// x's block; every completed assignment is reported to `done`.
class NcEnumerator {
public:
    NcEnumerator(int k, Flavor f) : flavor_(f), labels_(static_cast<std::size_t>(k), -1) {}

    void run(const std::function<void(const std::vector<int>&)>& emit) {
        fill(0, static_cast<int>(labels_.size()), [&] { emit(labels_); });
    }

private:
    using Continuation = std::function<void()>;

    bool gap_possible(int length) const { return flavor_ == Flavor::S || length % 2 == 0; }

    void fill(int lo, int hi, const Continuation& done) {
        if (lo == hi) {
            done();
            return;
        }
        labels_[static_cast<std::size_t>(lo)] = lo;
        extend(lo, lo, hi, 1, done);
    }

    // The block starting at `first` currently ends at `last` with `size` points.
    void extend(int first, int last, int hi, std::size_t size, const Continuation& done) {
        if (size_allowed(flavor_, size) && gap_possible(hi - last - 1)) fill(last + 1, hi, done);
        if (flavor_ == Flavor::O && size >= 2) return;
        for (int next = last + 1; next < hi; ++next) {
            if (!gap_possible(next - last - 1)) continue;
            fill(last + 1, next, [&, next] {
                labels_[static_cast<std::size_t>(next)] = first;
                extend(first, next, hi, size + 1, done);
            });
        }
    }

    Flavor flavor_;
    std::vector<int> labels_;
};

}  // namespace

bool admits(Flavor f, const SetPartition& p) {
    return std::all_of(p.blocks().begin(), p.blocks().end(),
                       [f](const SetPartition::Block& b) { return size_allowed(f, b.size()); });
}

std::vector<SetPartition> enumerate_nc(int k, Flavor f) {
    if (k < 1) throw std::invalid_argument("enumerate_nc: k must be positive");
    std::vector<SetPartition> out;
    NcEnumerator(k, f).run([&](const std::vector<int>& labels) { out.push_back(SetPartition::from_labels(labels)); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

std::vector<int> join_roots(const SetPartition& p, const SetPartition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("join: partitions of different sizes");
    std::vector<int> parent(static_cast<std::size_t>(p.size()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto* part : {&p, &q}) {
        for (const auto& b : part->blocks()) {
            const int r0 = find_root(parent, b.front() - 1);
            for (std::size_t i = 1; i < b.size(); ++i) {
                const int r = find_root(parent, b[i] - 1);
                if (r != r0) parent[static_cast<std::size_t>(r)] = r0;
            }
        }
    }
    for (int x = 0; x < p.size(); ++x) parent[static_cast<std::size_t>(x)] = find_root(parent, x);
    return parent;
}

}  // namespace

SetPartition join(const SetPartition& p, const SetPartition& q) {
    const auto roots = join_roots(p, q);
    return SetPartition::from_labels(roots);
}

int join_block_count(const SetPartition& p, const SetPartition& q) {
    const auto roots = join_roots(p, q);
    int count = 0;
    for (std::size_t x = 0; x < roots.size(); ++x) count += roots[x] == static_cast<int>(x);
    return count;
}

int delta(const SetPartition& p, std::span<const int> i) {
    if (static_cast<int>(i.size()) != p.size()) throw std::invalid_argument("delta: multi-index length differs from k");
    for (const auto& b : p.blocks()) {
        const int v = i[static_cast<std::size_t>(b.front() - 1)];
        for (int x : b)
            if (i[static_cast<std::size_t>(x - 1)] != v) return 0;
    }
    return 1;
}

}  // namespace hplus

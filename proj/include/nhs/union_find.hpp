#pragma once

#include <numeric>
#include <vector>

namespace nhs {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --count_;
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }
    int count() const { return count_; }
    int size() const { return int(parent_.size()); }

    /// Renumbers classes 0..count()-1 in order of first appearance.
    std::vector<int> compress() {
        std::vector<int> label(parent_.size(), -1);
        int next = 0;
        std::vector<int> out(parent_.size());
        for (int i = 0; i < int(parent_.size()); ++i) {
            int r = find(i);
            if (label[r] < 0) label[r] = next++;
            out[i] = label[r];
        }
        return out;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int count_;
};

/// Union-find whose elements carry a sign relative to their root.
/// unite(a, b, flip) imposes sign(a) = sign(b) xor flip and reports
/// whether that is consistent with what is already known.
class SignedUnionFind {
public:
    explicit SignedUnionFind(int n) : parent_(n), sign_(n, 0), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<int, int> find(int x) {
        int r = x;
        while (parent_[r] != r) r = parent_[r];
        int total = 0;
        for (int y = x; y != r; y = parent_[y]) total ^= sign_[y];
        int y = x;
        int sy = total;
        while (y != r) {
            int next = parent_[y];
            int snext = sy ^ sign_[y];
            parent_[y] = r;
            sign_[y] = sy;
            y = next;
            sy = snext;
        }
        return {r, total};
    }

    bool unite(int a, int b, int flip) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) return (sa ^ sb) == flip;
        if (size_[ra] < size_[rb]) {
            std::swap(ra, rb);
            std::swap(sa, sb);
        }
        parent_[rb] = ra;
        sign_[rb] = sa ^ sb ^ flip;
        size_[ra] += size_[rb];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> sign_;
    std::vector<int> size_;
};

}  // namespace nhs

#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sdke {

/// Set of vertices out of a fixed universe 0..n-1, stored as a bit set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> vertices) {
        VertexSet s(universe);
        for (int v : vertices) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : bits_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_) {
            if (w) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & ~o.bits_[i]) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& o) const {
        require_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & o.bits_[i]) return true;
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w) {
                int v = static_cast<int>(i * 64) + __builtin_ctzll(w);
                fn(v);
                w &= w - 1;
            }
        }
    }

    /// Lexicographic order on the sorted element sequences; used to break
    /// ties deterministically between equally good witness sets.
    bool operator<(const VertexSet& o) const {
        auto a = to_vector();
        auto b = o.to_vector();
        return a < b;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void require_same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ % 64 != 0 && !bits_.empty()) {
            bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace sdke

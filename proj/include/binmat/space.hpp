#pragma once

// The point set of the rank-r binary projective geometry and subsets of it.
// Points are the integers 1 .. 2^r - 1; the bits of a point are its GF(2)^r
// coordinates. A GroundSet packs membership into 64-bit words, bit x-1 for
// point x, so symmetric difference is word XOR.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "binmat/errors.hpp"
#include "binmat/gf2.hpp"

namespace binmat {

struct Space {
    int r;

    explicit Space(int rank) : r(rank) {
        if (rank < 1 || rank > 31) throw domain_error("rank must be in 1..31");
    }

    Element point_count() const { return (Element{1} << r) - 1; }
    bool valid_element(Element x) const { return x >= 1 && x <= point_count(); }

    void require_element(Element x) const {
        if (!valid_element(x))
            throw domain_error("element " + std::to_string(x) + " out of range for r=" +
                               std::to_string(r));
    }
    void require_functional(Functional a) const {
        if (!valid_element(a))
            throw domain_error("functional " + std::to_string(a) +
                               " out of range for r=" + std::to_string(r));
    }

    friend bool operator==(const Space&, const Space&) = default;
};

class GroundSet {
public:
    GroundSet() : r_(1), w_(1, 0) {}
    explicit GroundSet(Space s) : r_(s.r), w_(word_count(s.r), 0) {}

    static GroundSet empty_set(Space s) { return GroundSet(s); }
    static GroundSet full_set(Space s) {
        GroundSet g(s);
        for (auto& w : g.w_) w = ~std::uint64_t{0};
        g.trim();
        return g;
    }
    static GroundSet of(Space s, std::initializer_list<Element> xs) {
        GroundSet g(s);
        for (Element x : xs) g.set(x);
        return g;
    }

    int r() const { return r_; }
    Space space() const { return Space(r_); }
    Element universe_size() const { return (Element{1} << r_) - 1; }

    bool test(Element x) const {
        return (w_[(x - 1) >> 6] >> ((x - 1) & 63)) & 1;
    }
    void set(Element x) {
        space().require_element(x);
        w_[(x - 1) >> 6] |= std::uint64_t{1} << ((x - 1) & 63);
    }
    void reset(Element x) {
        space().require_element(x);
        w_[(x - 1) >> 6] &= ~(std::uint64_t{1} << ((x - 1) & 63));
    }
    void flip(Element x) {
        space().require_element(x);
        w_[(x - 1) >> 6] ^= std::uint64_t{1} << ((x - 1) & 63);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool is_full() const { return count() == universe_size(); }

    GroundSet operator~() const {
        GroundSet g(*this);
        for (auto& w : g.w_) w = ~w;
        g.trim();
        return g;
    }
    GroundSet& operator^=(const GroundSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    GroundSet& operator&=(const GroundSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    GroundSet& operator|=(const GroundSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend GroundSet operator^(GroundSet a, const GroundSet& b) { return a ^= b; }
    friend GroundSet operator&(GroundSet a, const GroundSet& b) { return a &= b; }
    friend GroundSet operator|(GroundSet a, const GroundSet& b) { return a |= b; }
    // Set difference.
    friend GroundSet operator-(GroundSet a, const GroundSet& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.w_.size(); ++i) a.w_[i] &= ~b.w_[i];
        return a;
    }
    bool subset_of(const GroundSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const GroundSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;
    // Numeric order of the membership word (high word first).
    friend bool operator<(const GroundSet& a, const GroundSet& b) {
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                const int b = std::countr_zero(w);
                fn(static_cast<Element>(64 * i + static_cast<std::size_t>(b) + 1));
                w &= w - 1;
            }
        }
    }
    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(count());
        for_each([&](Element x) { out.push_back(x); });
        return out;
    }
    // Smallest member, or 0 when empty.
    Element min_element() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<Element>(64 * i + std::countr_zero(w_[i]) + 1);
        return 0;
    }

    // Whole membership word for r <= 6.
    std::uint64_t mask64() const {
        if (r_ > 6) throw unsupported_error("mask64 requires r <= 6");
        return w_[0];
    }
    static GroundSet from_mask64(Space s, std::uint64_t mask) {
        if (s.r > 6) throw unsupported_error("from_mask64 requires r <= 6");
        GroundSet g(s);
        g.w_[0] = mask;
        g.trim();
        if (g.w_[0] != mask) throw domain_error("mask has bits outside the point set");
        return g;
    }
    const std::vector<std::uint64_t>& words() const { return w_; }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(r_);
        for (auto w : w_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
        return h;
    }

private:
    static std::size_t word_count(int r) {
        const std::uint64_t n = (std::uint64_t{1} << r) - 1;
        return static_cast<std::size_t>((n + 63) / 64);
    }
    void check_same(const GroundSet& o) const {
        if (r_ != o.r_) throw domain_error("ground sets live in different spaces");
    }
    void trim() {
        const std::uint64_t n = (std::uint64_t{1} << r_) - 1;
        const int rem = static_cast<int>(n & 63);
        if (rem) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int r_;
    std::vector<std::uint64_t> w_;
};

struct GroundSetHash {
    std::size_t operator()(const GroundSet& g) const { return g.hash(); }
};

// Pairing of a functional with a point: parity of popcount(a & x).
int dot(const Space& s, Functional a, Element x);

// {x : a.x = 1}; always 2^(r-1) points.
GroundSet cocircuit(Space s, Functional a);
// {x != 0 : a.x = 0}; the complementary hyperplane, 2^(r-1) - 1 points.
GroundSet hyperplane(Space s, Functional a);

// GF(2) rank of the point set.
int rank(const GroundSet& s);
// Span of the set minus the zero vector; a flat.
GroundSet closure(const GroundSet& s);
bool is_flat(const GroundSet& s);

// All flats of the given rank, ascending by membership word.
std::vector<GroundSet> flats_of_rank(Space s, int k);

// Number of affine subgeometries of rank r-2 (copies of AG(r-3,2)),
// counted by enumerating rank-(r-2) flats and their hyperplanes. Matches
// (2^r-1)(2^{r-1}-1)(2^{r-2}-1)/3.
std::uint64_t count_affine_subgeometries(Space s);

}  // namespace binmat

template <>
struct std::hash<binmat::GroundSet> {
    std::size_t operator()(const binmat::GroundSet& g) const { return g.hash(); }
};

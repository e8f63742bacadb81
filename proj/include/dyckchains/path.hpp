#ifndef DYCKCHAINS_PATH_HPP
#define DYCKCHAINS_PATH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <dyckchains/limits.hpp>

namespace dyck {

// Height after each step, starting with 0 before the first step.
using HeightProfile = std::vector<int>;

// Words over {u, d}. A step word need not be a Dyck path (shape borders are not).
bool is_step_word(std::string_view word) noexcept;
HeightProfile relative_heights(std::string_view word);
std::size_t count_u(std::string_view word) noexcept;

// Number of (possibly overlapping) occurrences of `factor` in `host`.
std::size_t count_factor(std::string_view host, std::string_view factor);

// Start positions of every occurrence of `factor` in `host`, ascending.
std::vector<std::size_t> factor_positions(std::string_view host, std::string_view factor);

// Canonical order on step words: lexicographic with u < d, shorter prefix first.
std::strong_ordering compare_words(std::string_view a, std::string_view b) noexcept;

// A balanced word over {u, d} whose height profile never goes negative.
// Immutable once constructed.
class DyckPath {
public:
    DyckPath() = default;

    // Throws ParseError naming the first offending position.
    static DyckPath parse(std::string_view word);

    const std::string& word() const noexcept { return steps_; }
    int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
    std::size_t length() const noexcept { return steps_.size(); }

    HeightProfile heights() const { return relative_heights(steps_); }
    std::size_t valley_count() const { return count_factor(steps_, "du"); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) noexcept {
        return compare_words(a.steps_, b.steps_);
    }

private:
    explicit DyckPath(std::string steps) : steps_(std::move(steps)) {}

    std::string steps_;
};

// All Dyck paths of semilength n in canonical order (u^n d^n first).
// Throws ResourceLimitError when n > limits.max_n.
std::vector<DyckPath> generate_paths(int n, const Limits& limits = {});

// Pointwise height dominance. Throws LengthMismatchError on unequal lengths.
bool is_below(const DyckPath& a, const DyckPath& b);

// Every path obtained by turning one valley du into a peak ud, left to right.
std::vector<DyckPath> upper_covers(const DyckPath& path);

// Dense indexing of D_n by canonical rank. Paths are bitmasks: bit k set iff
// step k is u. This is what the counting kernels iterate over.
class PathIndex {
public:
    using Mask = std::uint64_t;

    explicit PathIndex(int n, const Limits& limits = {});

    int semilength() const noexcept { return n_; }
    std::size_t size() const noexcept { return masks_.size(); }
    Mask mask(std::size_t i) const noexcept { return masks_[i]; }

    std::size_t rank(Mask mask) const noexcept;
    DyckPath path(std::size_t i) const;
    Mask encode(const DyckPath& path) const;

    // Calls f(rank of cover) for every upper cover of node i.
    template <class F>
    void for_each_cover(std::size_t i, F&& f) const {
        const Mask m = masks_[i];
        const int len = 2 * n_;
        for (int k = 0; k + 1 < len; ++k) {
            if (!((m >> k) & 1u) && ((m >> (k + 1)) & 1u)) {
                const Mask flipped = (m | (Mask{1} << k)) & ~(Mask{1} << (k + 1));
                f(rank(flipped));
            }
        }
    }

private:
    int n_;
    std::vector<Mask> masks_;
    // completions_[pos * (n_ + 2) + height]: ways to finish a Dyck word from there
    std::vector<std::uint64_t> completions_;

    std::uint64_t completions(int pos, int height) const noexcept;
};

} // namespace dyck

#endif

#ifndef DYCKCHAINS_SHAPES_HPP
#define DYCKCHAINS_SHAPES_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/limits.hpp>

namespace dyck {

// A connected skew Ferrers shape, stored as the two words bounding it. Both start
// at a common corner; `upper` stays strictly above `lower` except at the two ends.
// Lower starts with d and ends with u; upper starts with u and ends with d.
class SkewShape {
public:
    // Throws std::invalid_argument if the pair does not bound a connected shape.
    static SkewShape make(std::string lower, std::string upper);
    static std::optional<SkewShape> try_make(std::string lower, std::string upper);
    // "lower/upper", e.g. "dudu/uudd"
    static SkewShape parse(std::string_view text);

    const std::string& lower() const noexcept { return lower_; }
    const std::string& upper() const noexcept { return upper_; }
    int area() const noexcept { return area_; }
    std::string to_string() const { return lower_ + "/" + upper_; }

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }
    friend std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b);

private:
    SkewShape(std::string lower, std::string upper, int area)
        : lower_(std::move(lower)), upper_(std::move(upper)), area_(area) {}

    std::string lower_;
    std::string upper_;
    int area_ = 0;
};

// Lower border b(shape): the factor of the smaller path the shape sits on.
inline const std::string& border(const SkewShape& shape) { return shape.lower(); }

// Mirror image (reverse each word and swap u <-> d). Preserves area and tableau count.
SkewShape mirrored(const SkewShape& shape);

// Every shape of area m, ordered by length, then lower, then upper.
std::vector<SkewShape> enumerate_skfs(int m, const Limits& limits = {});

// Area-m shapes whose lower border is `border_word`. Empty for words not starting with d.
std::vector<SkewShape> shapes_with_border(int m, std::string_view border_word, const Limits& limits = {});

// Number of skew Young tableaux of the shape, counted as the valley-to-peak flip
// sequences that carry the lower word to the upper word without crossing it.
mpz_class tableau_count(const SkewShape& shape, const Limits& limits = {});

} // namespace dyck

#endif

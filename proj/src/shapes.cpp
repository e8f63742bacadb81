#include <dyckchains/shapes.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

#include <dyckchains/errors.hpp>
#include <dyckchains/path.hpp>

namespace dyck {

namespace {

// Area in cells, or nullopt when the pair does not bound a connected shape.
std::optional<int> shape_area(std::string_view lower, std::string_view upper) {
    if (lower.size() != upper.size() || lower.size() < 2 || !is_step_word(lower) || !is_step_word(upper)) {
        return std::nullopt;
    }
    if (count_u(lower) != count_u(upper)) {
        return std::nullopt;
    }
    const auto lo = relative_heights(lower);
    const auto hi = relative_heights(upper);
    int twice_area = 0;
    for (std::size_t i = 1; i + 1 < lo.size(); ++i) {
        if (hi[i] <= lo[i]) {
            return std::nullopt;
        }
        twice_area += hi[i] - lo[i];
    }
    return twice_area / 2;
}

std::string word_from_bits(unsigned bits, int len) {
    std::string w(static_cast<std::size_t>(len), 'd');
    for (int k = 0; k < len; ++k) {
        if ((bits >> k) & 1u) {
            w[static_cast<std::size_t>(k)] = 'u';
        }
    }
    return w;
}

void check_area_cap(int m, const Limits& limits) {
    if (m > limits.max_area) {
        throw ResourceLimitError("area " + std::to_string(m) + " exceeds cap " + std::to_string(limits.max_area));
    }
}

} // namespace

SkewShape SkewShape::make(std::string lower, std::string upper) {
    auto shape = try_make(lower, upper);
    if (!shape) {
        throw std::invalid_argument("'" + lower + "/" + upper + "' does not bound a connected skew shape");
    }
    return *std::move(shape);
}

std::optional<SkewShape> SkewShape::try_make(std::string lower, std::string upper) {
    const auto area = shape_area(lower, upper);
    if (!area) {
        return std::nullopt;
    }
    return SkewShape(std::move(lower), std::move(upper), *area);
}

SkewShape SkewShape::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("shape must be written lower/upper");
    }
    return make(std::string(text.substr(0, slash)), std::string(text.substr(slash + 1)));
}

std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto c = compare_words(a.lower_, b.lower_); c != 0) {
        return c;
    }
    return compare_words(a.upper_, b.upper_);
}

SkewShape mirrored(const SkewShape& shape) {
    auto mirror = [](const std::string& w) {
        std::string out(w.rbegin(), w.rend());
        for (char& c : out) {
            c = c == 'u' ? 'd' : 'u';
        }
        return out;
    };
    return SkewShape::make(mirror(shape.lower()), mirror(shape.upper()));
}

std::vector<SkewShape> enumerate_skfs(int m, const Limits& limits) {
    if (m < 1) {
        throw std::invalid_argument("shape area must be positive");
    }
    check_area_cap(m, limits);
    std::vector<SkewShape> out;
    // interior heights differ by at least 2, so length <= m + 1
    for (int len = 2; len <= m + 1; ++len) {
        std::vector<SkewShape> batch;
        const unsigned words = 1u << len;
        for (unsigned lo = 0; lo < words; ++lo) {
            const std::string lower = word_from_bits(lo, len);
            if (lower.front() != 'd' || lower.back() != 'u') {
                continue;
            }
            for (unsigned hi = 0; hi < words; ++hi) {
                const std::string upper = word_from_bits(hi, len);
                if (upper.front() != 'u' || upper.back() != 'd') {
                    continue;
                }
                if (const auto area = shape_area(lower, upper); area && *area == m) {
                    batch.push_back(SkewShape::make(lower, upper));
                }
            }
        }
        std::sort(batch.begin(), batch.end());
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<SkewShape> shapes_with_border(int m, std::string_view border_word, const Limits& limits) {
    std::vector<SkewShape> out;
    if (border_word.empty() || border_word.front() != 'd') {
        return out;
    }
    if (!is_step_word(border_word)) {
        throw std::invalid_argument("border must be a word over {u, d}");
    }
    check_area_cap(m, limits);
    const int len = static_cast<int>(border_word.size());
    if (len > m + 1) {
        return out;
    }
    for (unsigned hi = 0; hi < (1u << len); ++hi) {
        const std::string upper = word_from_bits(hi, len);
        if (const auto area = shape_area(border_word, upper); area && *area == m) {
            out.push_back(SkewShape::make(std::string(border_word), upper));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

mpz_class flip_sequences(const std::string& word, const std::string& target, const HeightProfile& ceiling,
                         std::map<std::string, mpz_class>& memo) {
    if (word == target) {
        return 1;
    }
    if (auto it = memo.find(word); it != memo.end()) {
        return it->second;
    }
    const auto heights = relative_heights(word);
    mpz_class total = 0;
    for (std::size_t pos : factor_positions(word, "du")) {
        // the valley bottom is vertex pos + 1 and rises by 2
        if (heights[pos + 1] + 2 > ceiling[pos + 1]) {
            continue;
        }
        std::string next = word;
        next[pos] = 'u';
        next[pos + 1] = 'd';
        total += flip_sequences(next, target, ceiling, memo);
    }
    memo.emplace(word, total);
    return total;
}

} // namespace

mpz_class tableau_count(const SkewShape& shape, const Limits& limits) {
    check_area_cap(shape.area(), limits);
    std::map<std::string, mpz_class> memo;
    return flip_sequences(shape.lower(), shape.upper(), relative_heights(shape.upper()), memo);
}

} // namespace dyck

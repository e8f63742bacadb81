#include <dyckchains/path.hpp>

#include <algorithm>
#include <string>

#include <dyckchains/errors.hpp>

namespace dyck {

bool is_step_word(std::string_view word) noexcept {
    return std::all_of(word.begin(), word.end(), [](char c) { return c == 'u' || c == 'd'; });
}

HeightProfile relative_heights(std::string_view word) {
    HeightProfile h(word.size() + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        h[i + 1] = h[i] + (word[i] == 'u' ? 1 : -1);
    }
    return h;
}

std::size_t count_u(std::string_view word) noexcept {
    return static_cast<std::size_t>(std::count(word.begin(), word.end(), 'u'));
}

std::size_t count_factor(std::string_view host, std::string_view factor) {
    return factor_positions(host, factor).size();
}

std::vector<std::size_t> factor_positions(std::string_view host, std::string_view factor) {
    std::vector<std::size_t> out;
    if (factor.empty() || factor.size() > host.size()) {
        return out;
    }
    for (std::size_t pos = host.find(factor); pos != std::string_view::npos;
         pos = host.find(factor, pos + 1)) {
        out.push_back(pos);
    }
    return out;
}

std::strong_ordering compare_words(std::string_view a, std::string_view b) noexcept {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i]) {
            return a[i] == 'u' ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return a.size() <=> b.size();
}

DyckPath DyckPath::parse(std::string_view word) {
    int height = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = word[i];
        if (c == 'u') {
            ++height;
        } else if (c == 'd') {
            if (--height < 0) {
                throw ParseError("path goes below the axis at position " + std::to_string(i), i);
            }
        } else {
            throw ParseError("invalid step '" + std::string(1, c) + "' at position " +
                                 std::to_string(i) + " (expected u or d)",
                             i);
        }
    }
    if (height != 0) {
        throw ParseError("path ends at height " + std::to_string(height) + ", not on the axis",
                         word.size());
    }
    return DyckPath(std::string(word));
}

namespace {

void check_cap(int n, const Limits& limits) {
    if (n < 0) {
        throw std::invalid_argument("semilength must be nonnegative");
    }
    if (n > limits.max_n) {
        throw ResourceLimitError("semilength " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(limits.max_n));
    }
    if (n > 31) {
        throw ResourceLimitError("semilength " + std::to_string(n) + " exceeds bitmask width");
    }
}

} // namespace

std::vector<DyckPath> generate_paths(int n, const Limits& limits) {
    const PathIndex index(n, limits);
    std::vector<DyckPath> out;
    out.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        out.push_back(index.path(i));
    }
    return out;
}

bool is_below(const DyckPath& a, const DyckPath& b) {
    if (a.length() != b.length()) {
        throw LengthMismatchError("is_below: paths have different lengths");
    }
    const auto ha = a.heights();
    const auto hb = b.heights();
    return std::equal(ha.begin(), ha.end(), hb.begin(), std::less_equal<>{});
}

std::vector<DyckPath> upper_covers(const DyckPath& path) {
    std::vector<DyckPath> out;
    for (std::size_t pos : factor_positions(path.word(), "du")) {
        std::string w = path.word();
        w[pos] = 'u';
        w[pos + 1] = 'd';
        out.push_back(DyckPath::parse(w));
    }
    return out;
}

PathIndex::PathIndex(int n, const Limits& limits) : n_(n) {
    check_cap(n, limits);
    const int len = 2 * n;
    const int stride = n + 2;
    completions_.assign(static_cast<std::size_t>((len + 1) * stride), 0);
    completions_[static_cast<std::size_t>(len * stride)] = 1;
    for (int pos = len - 1; pos >= 0; --pos) {
        for (int h = 0; h <= n; ++h) {
            std::uint64_t ways = 0;
            if (h + 1 <= n) {
                ways += completions_[static_cast<std::size_t>((pos + 1) * stride + h + 1)];
            }
            if (h > 0) {
                ways += completions_[static_cast<std::size_t>((pos + 1) * stride + h - 1)];
            }
            completions_[static_cast<std::size_t>(pos * stride + h)] = ways;
        }
    }

    masks_.reserve(static_cast<std::size_t>(completions(0, 0)));
    // Iterative DFS, u before d, yields canonical order.
    struct Frame {
        Mask mask;
        int pos;
        int height;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.pos == len) {
            masks_.push_back(f.mask);
            continue;
        }
        const int remaining = len - f.pos;
        // push d first so u is explored first
        if (f.height > 0) {
            stack.push_back({f.mask, f.pos + 1, f.height - 1});
        }
        if (f.height + 1 <= remaining - 1) {
            stack.push_back({f.mask | (Mask{1} << f.pos), f.pos + 1, f.height + 1});
        }
    }
}

std::uint64_t PathIndex::completions(int pos, int height) const noexcept {
    if (height < 0 || height > n_) {
        return 0;
    }
    return completions_[static_cast<std::size_t>(pos * (n_ + 2) + height)];
}

std::size_t PathIndex::rank(Mask mask) const noexcept {
    std::uint64_t r = 0;
    int height = 0;
    for (int pos = 0; pos < 2 * n_; ++pos) {
        if ((mask >> pos) & 1u) {
            ++height;
        } else {
            // every word taking u here instead precedes this one
            r += completions(pos + 1, height + 1);
            --height;
        }
    }
    return static_cast<std::size_t>(r);
}

DyckPath PathIndex::path(std::size_t i) const {
    std::string w(static_cast<std::size_t>(2 * n_), 'd');
    const Mask m = masks_[i];
    for (int k = 0; k < 2 * n_; ++k) {
        if ((m >> k) & 1u) {
            w[static_cast<std::size_t>(k)] = 'u';
        }
    }
    return DyckPath::parse(w);
}

PathIndex::Mask PathIndex::encode(const DyckPath& path) const {
    if (path.semilength() != n_) {
        throw LengthMismatchError("path semilength does not match index");
    }
    Mask m = 0;
    for (std::size_t k = 0; k < path.length(); ++k) {
        if (path.word()[k] == 'u') {
            m |= Mask{1} << k;
        }
    }
    return m;
}

} // namespace dyck

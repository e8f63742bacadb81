#include <dyckchains/placements.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dyck {

namespace {

struct Group {
    std::string word;
    std::size_t multiplicity;
    std::vector<std::size_t> positions;
};

std::vector<Group> group_words(const DyckPath& host, const std::vector<std::string>& words) {
    if (words.empty()) {
        throw std::invalid_argument("placement multiset must be nonempty");
    }
    std::map<std::string, std::size_t> mult;
    for (const auto& w : words) {
        if (w.empty() || !is_step_word(w)) {
            throw std::invalid_argument("placement words must be nonempty step words");
        }
        ++mult[w];
    }
    std::vector<Group> groups;
    for (const auto& [w, m] : mult) {
        groups.push_back({w, m, factor_positions(host.word(), w)});
    }
    return groups;
}

// Visits every unordered disjoint placement. Within a group positions are chosen
// in increasing order, which is what makes equal words unordered.
void visit_placements(const std::vector<Group>& groups, std::size_t host_len,
                      const std::function<void(const std::vector<OccurrencePlacement::Item>&)>& visit) {
    std::vector<bool> used(host_len, false);
    std::vector<OccurrencePlacement::Item> chosen;

    auto fits = [&](std::size_t start, std::size_t len) {
        for (std::size_t k = start; k < start + len; ++k) {
            if (used[k]) {
                return false;
            }
        }
        return true;
    };
    auto mark = [&](std::size_t start, std::size_t len, bool value) {
        std::fill(used.begin() + static_cast<std::ptrdiff_t>(start),
                  used.begin() + static_cast<std::ptrdiff_t>(start + len), value);
    };

    std::function<void(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t g, std::size_t placed, std::size_t next) {
            if (g == groups.size()) {
                visit(chosen);
                return;
            }
            const Group& group = groups[g];
            if (placed == group.multiplicity) {
                rec(g + 1, 0, 0);
                return;
            }
            const std::size_t len = group.word.size();
            for (std::size_t k = next; k < group.positions.size(); ++k) {
                const std::size_t start = group.positions[k];
                if (!fits(start, len)) {
                    continue;
                }
                mark(start, len, true);
                chosen.push_back({start, group.word});
                rec(g, placed + 1, k + 1);
                chosen.pop_back();
                mark(start, len, false);
            }
        };
    rec(0, 0, 0);
}

} // namespace

bool is_valid_placement(const DyckPath& host, const OccurrencePlacement& placement) {
    std::vector<bool> used(host.length(), false);
    for (const auto& item : placement.items) {
        if (item.word.empty() || item.start + item.word.size() > host.length() ||
            host.word().compare(item.start, item.word.size(), item.word) != 0) {
            return false;
        }
        for (std::size_t k = item.start; k < item.start + item.word.size(); ++k) {
            if (used[k]) {
                return false;
            }
            used[k] = true;
        }
    }
    return true;
}

mpz_class count_disjoint_placements(const DyckPath& host, const std::vector<std::string>& words) {
    const auto groups = group_words(host, words);
    mpz_class count = 0;
    visit_placements(groups, host.length(), [&](const auto&) { ++count; });
    return count;
}

std::vector<OccurrencePlacement> enumerate_disjoint_placements(const DyckPath& host,
                                                               const std::vector<std::string>& words) {
    const auto groups = group_words(host, words);
    std::vector<OccurrencePlacement> out;
    visit_placements(groups, host.length(), [&](const auto& items) {
        auto sorted = items;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.start < b.start; });
        out.push_back({std::move(sorted)});
    });
    return out;
}

} // namespace dyck

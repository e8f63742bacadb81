#ifndef DYCKCHAINS_PLACEMENTS_HPP
#define DYCKCHAINS_PLACEMENTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/path.hpp>

namespace dyck {

// Factors placed at fixed positions of a host path. Intervals [start, start + |word|)
// are pairwise disjoint; touching endpoints is allowed.
struct OccurrencePlacement {
    struct Item {
        std::size_t start;
        std::string word;
        friend bool operator==(const Item&, const Item&) = default;
    };
    std::vector<Item> items;
};

bool is_valid_placement(const DyckPath& host, const OccurrencePlacement& placement);

// Number of unordered sets of pairwise disjoint occurrences realizing the multiset
// `words`. Placements that differ only by swapping equal words count once.
mpz_class count_disjoint_placements(const DyckPath& host, const std::vector<std::string>& words);

// The placements themselves, for small inputs and tests.
std::vector<OccurrencePlacement> enumerate_disjoint_placements(const DyckPath& host,
                                                               const std::vector<std::string>& words);

} // namespace dyck

#endif

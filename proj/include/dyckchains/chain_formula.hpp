#ifndef DYCKCHAINS_CHAIN_FORMULA_HPP
#define DYCKCHAINS_CHAIN_FORMULA_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/kernels.hpp>
#include <dyckchains/limits.hpp>
#include <dyckchains/path.hpp>

namespace dyck {

// Integer partition, parts weakly decreasing.
struct Partition {
    std::vector<int> parts;

    int total() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of h in reverse lexicographic order: (h), (h-1, 1), ..., (1, ..., 1).
std::vector<Partition> partitions(int h);

// h! / (parts_1! ... parts_k!)
mpz_class multinomial(const Partition& lambda);

// One term of the formula regrouped by lower borders: `coefficient` times the number
// of unordered disjoint placements of `borders` in the host path.
struct ExpansionTerm {
    mpz_class coefficient;
    std::vector<std::string> borders; // sorted
};

// Counts saturated chains of length h by decomposing the region between the ends of
// a chain into connected skew shapes sitting on disjoint factors of the start path.
// Each unordered set of (position, shape) items whose areas form a partition of h
// contributes multinomial(h; areas) times the product of the tableau counts.
class ChainFormula {
public:
    explicit ChainFormula(int h, const Limits& limits = {});

    int length() const noexcept { return h_; }

    mpz_class chains_from(const DyckPath& path) const;
    mpz_class total(int n, Execution exec = Execution::parallel) const;
    std::vector<ExpansionTerm> expansion() const;

private:
    // Shapes of one area sharing a lower border; weight is the sum of their tableau counts.
    struct BorderClass {
        std::string border;
        mpz_class weight;
    };

    int h_;
    Limits limits_;
    std::vector<Partition> partitions_;
    std::vector<mpz_class> weights_;               // multinomial per partition
    std::vector<std::vector<BorderClass>> by_area_; // index = area
};

mpz_class sc_h_path_via_formula(const DyckPath& path, int h, const Limits& limits = {});
mpz_class sc_h_via_formula(int n, int h, const Limits& limits = {}, Execution exec = Execution::parallel);

} // namespace dyck

#endif

#include <dyckchains/chain_formula.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <dyckchains/errors.hpp>
#include <dyckchains/shapes.hpp>

namespace dyck {

int Partition::total() const {
    int s = 0;
    for (int p : parts) {
        s += p;
    }
    return s;
}

std::vector<Partition> partitions(int h) {
    if (h < 0) {
        throw std::invalid_argument("cannot partition a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back({current});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(h, h);
    return out;
}

namespace {

mpz_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

// area -> multiplicity, ascending by area
std::map<int, int> area_multiplicities(const Partition& lambda) {
    std::map<int, int> m;
    for (int p : lambda.parts) {
        ++m[p];
    }
    return m;
}

} // namespace

mpz_class multinomial(const Partition& lambda) {
    mpz_class result = factorial(lambda.total());
    for (int p : lambda.parts) {
        result /= factorial(p);
    }
    return result;
}

ChainFormula::ChainFormula(int h, const Limits& limits) : h_(h), limits_(limits) {
    if (h < 0) {
        throw std::invalid_argument("chain length must be nonnegative");
    }
    if (h > limits.max_h) {
        throw ResourceLimitError("chain length " + std::to_string(h) + " exceeds cap " +
                                 std::to_string(limits.max_h));
    }
    partitions_ = partitions(h);
    for (const auto& lambda : partitions_) {
        weights_.push_back(multinomial(lambda));
    }
    by_area_.resize(static_cast<std::size_t>(h + 1));
    for (int area = 1; area <= h; ++area) {
        std::map<std::string, mpz_class> weight;
        for (const auto& shape : enumerate_skfs(area, limits)) {
            weight[shape.lower()] += tableau_count(shape, limits);
        }
        for (auto& [b, w] : weight) {
            by_area_[static_cast<std::size_t>(area)].push_back({b, w});
        }
    }
}

mpz_class ChainFormula::chains_from(const DyckPath& path) const {
    if (h_ == 0) {
        return 1;
    }
    const std::string& host = path.word();

    struct Occurrence {
        std::size_t start;
        std::size_t len;
        const mpz_class* weight;
    };
    // occurrences[area]: every (position, border class) of that area in the host
    std::vector<std::vector<Occurrence>> occurrences(by_area_.size());
    for (std::size_t area = 1; area < by_area_.size(); ++area) {
        for (const auto& cls : by_area_[area]) {
            for (std::size_t pos : factor_positions(host, cls.border)) {
                occurrences[area].push_back({pos, cls.border.size(), &cls.weight});
            }
        }
    }

    std::vector<bool> used(host.size(), false);
    mpz_class total = 0;
    for (std::size_t pi = 0; pi < partitions_.size(); ++pi) {
        std::vector<std::pair<int, int>> groups; // (area, multiplicity)
        for (const auto& [area, mult] : area_multiplicities(partitions_[pi])) {
            groups.emplace_back(area, mult);
        }
        // Within an area the chosen occurrences have increasing index: unordered sets.
        std::function<mpz_class(std::size_t, int, std::size_t)> rec = [&](std::size_t g, int placed,
                                                                          std::size_t next) -> mpz_class {
            if (g == groups.size()) {
                return 1;
            }
            const auto [area, mult] = groups[g];
            if (placed == mult) {
                return rec(g + 1, 0, 0);
            }
            const auto& occ = occurrences[static_cast<std::size_t>(area)];
            mpz_class sum = 0;
            for (std::size_t k = next; k < occ.size(); ++k) {
                const auto& o = occ[k];
                bool free = true;
                for (std::size_t i = o.start; i < o.start + o.len && free; ++i) {
                    free = !used[i];
                }
                if (!free) {
                    continue;
                }
                for (std::size_t i = o.start; i < o.start + o.len; ++i) {
                    used[i] = true;
                }
                sum += *o.weight * rec(g, placed + 1, k + 1);
                for (std::size_t i = o.start; i < o.start + o.len; ++i) {
                    used[i] = false;
                }
            }
            return sum;
        };
        total += weights_[pi] * rec(0, 0, 0);
    }
    return total;
}

mpz_class ChainFormula::total(int n, Execution exec) const {
    const PathIndex index(n, limits_);
    return kernels::sum_indexed(exec, index.size(),
                                [&](std::size_t i) { return chains_from(index.path(i)); });
}

std::vector<ExpansionTerm> ChainFormula::expansion() const {
    std::map<std::vector<std::string>, mpz_class> terms;
    for (std::size_t pi = 0; pi < partitions_.size(); ++pi) {
        std::vector<std::pair<int, int>> groups;
        for (const auto& [area, mult] : area_multiplicities(partitions_[pi])) {
            groups.emplace_back(area, mult);
        }
        // (area, border class index) per chosen item; classes within an area non-decreasing
        std::vector<std::pair<int, std::size_t>> chosen;
        std::function<void(std::size_t, int, std::size_t)> rec = [&](std::size_t g, int placed, std::size_t from) {
            if (g == groups.size()) {
                mpz_class coeff = weights_[pi];
                std::map<std::string, std::map<int, int>> word_areas;
                std::vector<std::string> borders;
                // Equal words within one area are already unordered in the placement count;
                // the same word under different areas is distinguishable, which the
                // multinomial over its per-area multiplicities accounts for.
                for (const auto& [area, ci] : chosen) {
                    const auto& cls = by_area_[static_cast<std::size_t>(area)][ci];
                    coeff *= cls.weight;
                    borders.push_back(cls.border);
                    ++word_areas[cls.border][area];
                }
                for (const auto& [word, areas] : word_areas) {
                    Partition split;
                    for (const auto& [area, m] : areas) {
                        split.parts.push_back(m);
                    }
                    coeff *= multinomial(split);
                }
                std::sort(borders.begin(), borders.end());
                terms[borders] += coeff;
                return;
            }
            const auto [area, mult] = groups[g];
            if (placed == mult) {
                rec(g + 1, 0, 0);
                return;
            }
            const auto& classes = by_area_[static_cast<std::size_t>(area)];
            for (std::size_t ci = from; ci < classes.size(); ++ci) {
                chosen.emplace_back(area, ci);
                rec(g, placed + 1, ci);
                chosen.pop_back();
            }
        };
        rec(0, 0, 0);
    }
    std::vector<ExpansionTerm> out;
    for (auto& [borders, coeff] : terms) {
        out.push_back({coeff, borders});
    }
    return out;
}

mpz_class sc_h_path_via_formula(const DyckPath& path, int h, const Limits& limits) {
    return ChainFormula(h, limits).chains_from(path);
}

mpz_class sc_h_via_formula(int n, int h, const Limits& limits, Execution exec) {
    return ChainFormula(h, limits).total(n, exec);
}

} // namespace dyck

#include <dyckchains/lattice.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <dyckchains/errors.hpp>

namespace dyck {

HasseDiagram build_hasse(int n, const Limits& limits) {
    const PathIndex index(n, limits);
    HasseDiagram diagram;
    diagram.semilength = n;
    diagram.nodes.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        diagram.nodes.push_back(index.path(i));
        index.for_each_cover(i, [&](std::size_t j) {
            diagram.edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        });
    }
    return diagram;
}

mpz_class count_saturated_chains(int n, int h, const Limits& limits, Execution exec) {
    if (h < 0) {
        throw std::invalid_argument("chain length must be nonnegative");
    }
    const PathIndex index(n, limits);
    // chains[i] = number of saturated chains of the current length starting at i
    std::vector<mpz_class> chains(index.size(), mpz_class(1));
    for (int round = 0; round < h; ++round) {
        chains = kernels::propagate_covers(exec, index, chains);
    }
    mpz_class total = 0;
    for (const auto& c : chains) {
        total += c;
    }
    return total;
}

namespace {

mpz_class chains_from(const std::string& word, int h, std::map<std::pair<std::string, int>, mpz_class>& memo) {
    if (h == 0) {
        return 1;
    }
    const auto key = std::make_pair(word, h);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    mpz_class total = 0;
    for (std::size_t pos : factor_positions(word, "du")) {
        std::string next = word;
        next[pos] = 'u';
        next[pos + 1] = 'd';
        total += chains_from(next, h - 1, memo);
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

mpz_class count_chains_from(const DyckPath& path, int h) {
    if (h < 0) {
        throw std::invalid_argument("chain length must be nonnegative");
    }
    std::map<std::pair<std::string, int>, mpz_class> memo;
    return chains_from(path.word(), h, memo);
}

int longest_chain_length(int n, const Limits& limits) {
    const PathIndex index(n, limits);
    // A cover turns some du into ud, so it precedes its lower element in canonical order.
    std::vector<int> longest(index.size(), 0);
    for (std::size_t i = 0; i < index.size(); ++i) {
        int best = 0;
        index.for_each_cover(i, [&](std::size_t j) { best = std::max(best, longest[j] + 1); });
        longest[i] = best;
    }
    return longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
}

mpz_class valley_abscissae_sum(int n, const Limits& limits, Execution exec) {
    const PathIndex index(n, limits);
    const int len = 2 * n;
    return kernels::sum_indexed(exec, index.size(), [&](std::size_t i) {
        const auto m = index.mask(i);
        mpz_class sum = 0;
        for (int k = 0; k + 1 < len; ++k) {
            if (!((m >> k) & 1u) && ((m >> (k + 1)) & 1u)) {
                sum += k + 1; // valley bottom sits after step k
            }
        }
        return sum;
    });
}

mpz_class total_factor_count(int n, std::string_view factor, const Limits& limits) {
    mpz_class total = 0;
    for (const auto& p : generate_paths(n, limits)) {
        total += static_cast<unsigned long>(count_factor(p.word(), factor));
    }
    return total;
}

void write_dot(std::ostream& out, const HasseDiagram& diagram) {
    out << "digraph D" << diagram.semilength << " {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        const auto& w = diagram.nodes[i].word();
        out << "  n" << i << " [label=\"" << (w.empty() ? std::string("()") : w) << "\"];\n";
    }
    for (const auto& [a, b] : diagram.edges) {
        out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
}

void write_edge_list(std::ostream& out, const HasseDiagram& diagram) {
    out << "# n=" << diagram.semilength << " nodes=" << diagram.nodes.size() << '\n';
    for (const auto& [a, b] : diagram.edges) {
        out << a << ' ' << b << '\n';
    }
}

} // namespace dyck

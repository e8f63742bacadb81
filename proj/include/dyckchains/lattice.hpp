#ifndef DYCKCHAINS_LATTICE_HPP
#define DYCKCHAINS_LATTICE_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/kernels.hpp>
#include <dyckchains/limits.hpp>
#include <dyckchains/path.hpp>

namespace dyck {

// Covering graph of D_n. Node i is the i-th path in canonical order; an edge
// (a, b) means node b covers node a.
struct HasseDiagram {
    int semilength = 0;
    std::vector<DyckPath> nodes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

HasseDiagram build_hasse(int n, const Limits& limits = {});

// sc_h(D_n) by h rounds of cover propagation over D_n. h = 0 gives Catalan(n).
mpz_class count_saturated_chains(int n, int h, const Limits& limits = {},
                                 Execution exec = Execution::parallel);

// Saturated chains of length exactly h whose minimum is `path`.
mpz_class count_chains_from(const DyckPath& path, int h);

// Length of the longest saturated chain in D_n (the rank of the lattice).
int longest_chain_length(int n, const Limits& limits = {});

// Sum over D_n of the x-coordinates of all valley bottoms.
mpz_class valley_abscissae_sum(int n, const Limits& limits = {},
                               Execution exec = Execution::parallel);

// Sum over D_n of the occurrence counts (overlaps included) of `factor`.
mpz_class total_factor_count(int n, std::string_view factor, const Limits& limits = {});

// DOT digraph, edges lower -> upper, nodes labelled by their step words.
void write_dot(std::ostream& out, const HasseDiagram& diagram);

// "# n=<n> nodes=<count>" header, then "i j" per edge.
void write_edge_list(std::ostream& out, const HasseDiagram& diagram);

} // namespace dyck

#endif

#include <doctest.h>

#include <sstream>

#include <dyckchains/kernels.hpp>
#include <dyckchains/lattice.hpp>

#include "oracles.hpp"

using namespace dyck;

TEST_SUITE("lattice") {

TEST_CASE("Hasse diagrams of small lattices") {
    const auto d0 = build_hasse(0);
    CHECK(d0.nodes.size() == 1);
    CHECK(d0.edges.empty());
    const auto d2 = build_hasse(2);
    CHECK(d2.nodes.size() == 2);
    CHECK(d2.edges.size() == 1);
    const auto d3 = build_hasse(3);
    CHECK(d3.nodes.size() == 5);
    CHECK(d3.edges.size() == 5);
    for (const auto& [a, b] : d3.edges) {
        CHECK(is_below(d3.nodes[a], d3.nodes[b]));
    }
}

TEST_CASE("edge count is sc_1 and total valley count") {
    for (int n = 0; n <= 9; ++n) {
        const auto d = build_hasse(n);
        CHECK(count_saturated_chains(n, 1) == static_cast<unsigned long>(d.edges.size()));
        CHECK(total_factor_count(n, "du") == static_cast<unsigned long>(d.edges.size()));
    }
}

TEST_CASE("brute-force chain counts") {
    CHECK(count_saturated_chains(3, 2) == 4);
    CHECK(count_saturated_chains(4, 3) == 38);
    for (int n = 0; n <= 10; ++n) {
        CHECK(count_saturated_chains(n, 0) == oracle::catalan(n));
    }
    for (int n = 0; n <= 6; ++n) {
        for (int h = 0; h <= 4; ++h) {
            CHECK(count_saturated_chains(n, h) == oracle::chains_by_order(n, h));
        }
    }
}

TEST_CASE("chains from a path sum to the lattice count") {
    CHECK(count_chains_from(DyckPath::parse("uuuddd"), 1) == 0);
    CHECK(count_chains_from(DyckPath::parse("ududud"), 2) == 2);
    CHECK(count_chains_from(DyckPath::parse("uduudd"), 0) == 1);
    for (int n = 0; n <= 8; ++n) {
        for (int h = 0; h <= 4; ++h) {
            mpz_class sum = 0;
            for (const auto& p : generate_paths(n)) {
                const auto c = count_chains_from(p, h);
                if (n <= 6) {
                    CHECK(c == oracle::chains_by_flips(p.word(), h));
                }
                sum += c;
            }
            CHECK(sum == count_saturated_chains(n, h));
        }
    }
}

TEST_CASE("no chains beyond the rank") {
    for (int n = 0; n <= 6; ++n) {
        const int rank = longest_chain_length(n);
        CHECK(rank == n * (n - 1) / 2);
        CHECK(count_saturated_chains(n, rank + 1) == 0);
        if (rank > 0) {
            CHECK(count_saturated_chains(n, rank) > 0);
        }
    }
}

TEST_CASE("valley abscissae") {
    CHECK(valley_abscissae_sum(0) == 0);
    CHECK(valley_abscissae_sum(2) == 2);
    CHECK(valley_abscissae_sum(3) == 15);
    for (int n = 0; n <= 9; ++n) {
        CHECK(valley_abscissae_sum(n) == oracle::valley_abscissae(n));
    }
    for (int n = 2; n <= 9; ++n) {
        CHECK(count_saturated_chains(n, 2) / 2 == valley_abscissae_sum(n - 1));
        CHECK(count_saturated_chains(n, 2) % 2 == 0);
    }
}

TEST_CASE("factor totals") {
    for (int n = 0; n <= 7; ++n) {
        for (const char* f : {"du", "duu", "dduu", "dudu", "duuu", "uu"}) {
            CHECK(total_factor_count(n, f) == oracle::factor_total(n, f));
        }
    }
}

TEST_CASE("exports") {
    std::ostringstream dot;
    write_dot(dot, build_hasse(2));
    CHECK(dot.str() == "digraph D2 {\n  rankdir=BT;\n  n0 [label=\"uudd\"];\n  n1 [label=\"udud\"];\n  n1 -> n0;\n}\n");
    std::ostringstream edges;
    write_edge_list(edges, build_hasse(3));
    CHECK(edges.str() == "# n=3 nodes=5\n1 0\n2 1\n3 1\n4 2\n4 3\n");
}

}

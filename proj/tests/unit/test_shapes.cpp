#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <dyckchains/errors.hpp>
#include <dyckchains/path.hpp>
#include <dyckchains/shapes.hpp>

#include "oracles.hpp"

using namespace dyck;

namespace {

std::multiset<std::string> borders_of(const std::vector<SkewShape>& shapes) {
    std::multiset<std::string> b;
    for (const auto& s : shapes) {
        b.insert(border(s));
    }
    return b;
}

std::vector<std::string> words_of_length(int len) {
    std::vector<std::string> out{""};
    for (int i = 0; i < len; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + 'u');
            next.push_back(w + 'd');
        }
        out = std::move(next);
    }
    return out;
}

// Shapes of area m from the definition, searching string pairs directly.
std::set<std::pair<std::string, std::string>> shapes_by_search(int m) {
    std::set<std::pair<std::string, std::string>> found;
    for (int len = 2; len <= m + 1; ++len) {
        const auto words = words_of_length(len);
        for (const auto& lo : words) {
            for (const auto& hi : words) {
                if (std::count(lo.begin(), lo.end(), 'u') != std::count(hi.begin(), hi.end(), 'u')) {
                    continue;
                }
                int hl = 0;
                int hh = 0;
                int twice_area = 0;
                bool ok = true;
                for (int i = 0; i < len; ++i) {
                    hl += lo[i] == 'u' ? 1 : -1;
                    hh += hi[i] == 'u' ? 1 : -1;
                    if (i + 1 < len && hh <= hl) {
                        ok = false;
                    }
                    twice_area += hh - hl;
                }
                if (ok && twice_area == 2 * m) {
                    found.emplace(lo, hi);
                }
            }
        }
    }
    return found;
}

} // namespace

TEST_SUITE("shapes") {

TEST_CASE("construction and validation") {
    const auto cell = SkewShape::make("du", "ud");
    CHECK(cell.area() == 1);
    CHECK(border(cell) == "du");
    CHECK(SkewShape::parse("dudu/uudd").area() == 3);
    CHECK(SkewShape::parse("dudu/uudd").to_string() == "dudu/uudd");
    CHECK_FALSE(SkewShape::try_make("ddu", "duu").has_value());
    CHECK_FALSE(SkewShape::try_make("dudu", "udud").has_value()); // cells touching at a corner
    CHECK(SkewShape::make("dduu", "uudd").area() == 4);
    CHECK_FALSE(SkewShape::try_make("du", "udd").has_value());
    CHECK_THROWS_AS(SkewShape::make("du", "du"), std::invalid_argument);
    CHECK_THROWS(SkewShape::parse("dudu"));
}

TEST_CASE("small areas") {
    CHECK(enumerate_skfs(1).size() == 1);
    const auto two = enumerate_skfs(2);
    CHECK(two.size() == 2);
    CHECK(borders_of(two) == std::multiset<std::string>{"ddu", "duu"});
    const auto three = enumerate_skfs(3);
    CHECK(three.size() == 4);
    CHECK(borders_of(three) == std::multiset<std::string>{"dddu", "duuu", "dduu", "dudu"});
    std::multiset<std::string> counts;
    for (const auto& s : three) {
        counts.insert(tableau_count(s).get_str());
    }
    CHECK(counts == std::multiset<std::string>{"1", "1", "2", "2"});
    CHECK(tableau_count(SkewShape::parse("dddu/uddd")) == 1);
    CHECK(tableau_count(SkewShape::parse("duuu/uuud")) == 1);
    CHECK(tableau_count(SkewShape::parse("dduu/udud")) == 2);
    CHECK(tableau_count(SkewShape::parse("dudu/uudd")) == 2);
}

TEST_CASE("enumeration agrees with direct search and frozen counts") {
    for (int m = 1; m <= 5; ++m) {
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& s : enumerate_skfs(m)) {
            CHECK(s.area() == m);
            got.emplace(s.lower(), s.upper());
        }
        CHECK(got == shapes_by_search(m));
    }
    CHECK(enumerate_skfs(4).size() == 9);
    CHECK(enumerate_skfs(5).size() == 20);
}

TEST_CASE("limits") {
    CHECK_THROWS_AS(enumerate_skfs(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_skfs(7), ResourceLimitError);
}

TEST_CASE("tableau counts equal linear extensions of the cell poset") {
    for (int m = 1; m <= 6; ++m) {
        for (const auto& s : enumerate_skfs(m)) {
            const auto t = tableau_count(s);
            CHECK(t >= 1);
            CHECK(t == oracle::linear_extensions(s.lower(), s.upper()));
            if (m <= 4) {
                CHECK((t == 1) == oracle::cells_totally_ordered(s.lower(), s.upper()));
            }
        }
    }
}

TEST_CASE("mirror symmetry is a t-preserving bijection") {
    for (int m = 1; m <= 5; ++m) {
        const auto all = enumerate_skfs(m);
        std::set<std::string> images;
        mpz_class sum = 0;
        mpz_class mirrored_sum = 0;
        for (const auto& s : all) {
            const auto r = mirrored(s);
            CHECK(r.area() == s.area());
            CHECK(std::find(all.begin(), all.end(), r) != all.end());
            CHECK(mirrored(r) == s);
            CHECK(tableau_count(r) == tableau_count(s));
            images.insert(r.to_string());
            sum += tableau_count(s);
            mirrored_sum += tableau_count(r);
        }
        CHECK(images.size() == all.size());
        CHECK(sum == mirrored_sum);
    }
}

TEST_CASE("shapes by border") {
    CHECK(shapes_with_border(2, "ddu").size() == 1);
    const auto dudu = shapes_with_border(3, "dudu");
    REQUIRE(dudu.size() == 1);
    CHECK(dudu[0].upper() == "uudd");
    CHECK(shapes_with_border(1, "ud").empty());
    CHECK(shapes_with_border(1, "").empty());
}

TEST_CASE("flips inside an embedded shape stay Dyck") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 8; ++n) {
        const auto paths = generate_paths(n);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& host = paths[rng() % paths.size()].word();
            for (int m = 1; m <= 4; ++m) {
                for (const auto& s : enumerate_skfs(m)) {
                    for (std::size_t pos : factor_positions(host, s.lower())) {
                        std::string w = host;
                        w.replace(pos, s.lower().size(), s.upper());
                        CHECK_NOTHROW(DyckPath::parse(w));
                        CHECK(is_below(DyckPath::parse(host), DyckPath::parse(w)));
                    }
                }
            }
        }
    }
}

}

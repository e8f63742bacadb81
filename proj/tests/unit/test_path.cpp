#include <doctest.h>

#include <algorithm>

#include <dyckchains/errors.hpp>
#include <dyckchains/path.hpp>

#include "oracles.hpp"

using namespace dyck;

namespace {

std::vector<std::string> words_of(const std::vector<DyckPath>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) {
        out.push_back(p.word());
    }
    return out;
}

} // namespace

TEST_SUITE("path") {

TEST_CASE("parse accepts Dyck words and reports the first bad position") {
    CHECK(DyckPath::parse("uuddud").semilength() == 3);
    CHECK(DyckPath::parse("").semilength() == 0);
    try {
        DyckPath::parse("udxd");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        DyckPath::parse("uddu");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        DyckPath::parse("uud");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("generation matches filtered words in canonical order") {
    const auto d0 = generate_paths(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].word().empty());

    CHECK(words_of(generate_paths(3)) ==
          std::vector<std::string>{"uuuddd", "uududd", "uuddud", "uduudd", "ududud"});
    CHECK(generate_paths(8).size() == 1430);

    for (int n = 0; n <= 8; ++n) {
        auto expected = oracle::dyck_words(n);
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            return compare_words(a, b) == std::strong_ordering::less;
        });
        CHECK(words_of(generate_paths(n)) == expected);
        CHECK(expected.size() == oracle::catalan(n).get_ui());
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(generate_paths(15), ResourceLimitError);
    Limits small;
    small.max_n = 4;
    CHECK_THROWS_AS(generate_paths(5, small), ResourceLimitError);
    CHECK(generate_paths(4, small).size() == 14);
}

TEST_CASE("is_below") {
    const auto lo = DyckPath::parse("ududud");
    const auto hi = DyckPath::parse("uuuddd");
    CHECK(is_below(lo, hi));
    CHECK_FALSE(is_below(hi, lo));
    CHECK_FALSE(is_below(DyckPath::parse("uuddud"), DyckPath::parse("uduudd")));
    CHECK_FALSE(is_below(DyckPath::parse("uduudd"), DyckPath::parse("uuddud")));
    for (const auto& p : generate_paths(4)) {
        CHECK(is_below(p, p));
    }
    CHECK_THROWS_AS(is_below(lo, DyckPath::parse("ud")), LengthMismatchError);
}

TEST_CASE("upper covers flip each valley") {
    CHECK(upper_covers(DyckPath::parse("uuuddd")).empty());
    CHECK(words_of(upper_covers(DyckPath::parse("udud"))) == std::vector<std::string>{"uudd"});
    const auto c = words_of(upper_covers(DyckPath::parse("ududud")));
    CHECK(c == std::vector<std::string>{"uuddud", "uduudd"});
}

TEST_CASE("covers are exactly the order-theoretic covers") {
    for (int n = 0; n <= 6; ++n) {
        const auto paths = generate_paths(n);
        for (const auto& a : paths) {
            const auto cov = upper_covers(a);
            CHECK(cov.size() == a.valley_count());
            for (const auto& b : paths) {
                bool order_cover = a != b && oracle::dominated(a.word(), b.word());
                for (const auto& c : paths) {
                    if (c != a && c != b && oracle::dominated(a.word(), c.word()) &&
                        oracle::dominated(c.word(), b.word())) {
                        order_cover = false;
                    }
                }
                const bool listed = std::find(cov.begin(), cov.end(), b) != cov.end();
                CHECK(listed == order_cover);
            }
        }
    }
}

TEST_CASE("PathIndex ranks round-trip") {
    for (int n = 0; n <= 9; ++n) {
        const PathIndex index(n);
        CHECK(index.size() == oracle::catalan(n).get_ui());
        for (std::size_t i = 0; i < index.size(); ++i) {
            CHECK(index.rank(index.mask(i)) == i);
            CHECK(index.rank(index.encode(index.path(i))) == i);
        }
    }
}

TEST_CASE("factor helpers") {
    CHECK(count_factor("ududud", "du") == 2);
    CHECK(count_factor("uuuu", "uu") == 3);
    CHECK(factor_positions("ududud", "ud") == std::vector<std::size_t>{0, 2, 4});
    CHECK(relative_heights("dduu") == HeightProfile{0, -1, -2, -1, 0});
    CHECK(is_step_word("udd"));
    CHECK_FALSE(is_step_word("uxd"));
}

}

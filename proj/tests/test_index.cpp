#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wrect/index.hpp"

using namespace wrect;

TEST_CASE("decompose basics") {
    Config c42(4, 2);
    auto rc = decompose(7, c42);
    CHECK(rc.row == 3);
    CHECK(rc.col == 1);
    rc = decompose(-1, c42);
    CHECK(rc.row == 3);
    CHECK(rc.col == -1);
    CHECK_THROWS_AS(decompose(8, c42), std::domain_error);
    CHECK_THROWS_AS(decompose(9, c42), std::domain_error);
}

TEST_CASE("decompose is a bijection and odd under negation") {
    for (int l : {2, 4}) {
        Config cfg(4, l);
        std::set<std::pair<int, int>> seen;
        for (int a : I_range(cfg.nl())) {
            auto rc = decompose(a, cfg);
            CHECK(in_I(rc.row, cfg.n));
            CHECK(in_I(rc.col, cfg.l));
            CHECK(rc.col * cfg.n + rc.row == a);
            seen.insert({rc.row, rc.col});
            auto neg = decompose(-a, cfg);
            CHECK(neg.row == -rc.row);
            CHECK(neg.col == -rc.col);
        }
        CHECK(int(seen.size()) == cfg.nl());
    }
}

TEST_CASE("hat") {
    CHECK(hat(3) == 0);
    CHECK(hat(-5) == 1);
    CHECK(hat(0) == 0);
    for (int i : I_range(8)) CHECK(hat(-i) == 1 - hat(i));
}

TEST_CASE("gamma_sign equal columns") {
    Config cfg(4, 4);
    // p = q: empty sum, gamma = hat(p)(hat(i)+hat(j)) mod 2
    for (int p : I_range(4))
        for (int ri : I_range(4))
            for (int rj : I_range(4)) {
                int a = compose(rj, p, cfg), b = compose(ri, p, cfg);
                int expect = (hat(p) * hat(rj) + hat(p) * hat(ri)) % 2;
                CHECK(gamma_sign(a, b, cfg) == expect);
            }
}

TEST_CASE("gamma_sign general against direct summation oracle") {
    // Independent re-implementation; the sum walks the columns between col(b)
    // and col(a). (With the opposite bound the centralizer family of test_brst
    // stops commuting with f, which is how the convention was pinned.)
    Config cfg(4, 4);
    for (int a : I_range(16))
        for (int b : I_range(16)) {
            auto ra = decompose(a, cfg), rb = decompose(b, cfg);
            int p = ra.col, q = rb.col;
            int total = hat(p) * hat(ra.row) + hat(q) * hat(rb.row);
            for (int u = 1; 2 * u <= p - q; ++u) total += hat(q + 2 * u);
            CHECK(gamma_sign(a, b, cfg) == total % 2);
        }
}

TEST_CASE("condition enumerators") {
    Config cfg(4, 2);
    // (C)^0: one pair per column
    CHECK(condition_C(1, 3, 0, cfg).size() == 2);
    // (C)^1: only col(a)=1, col(b)=-1
    auto c1 = condition_C(1, 3, 1, cfg);
    REQUIRE(c1.size() == 1);
    CHECK(row_of(c1[0].first, cfg) == 1);
    CHECK(row_of(c1[0].second, cfg) == 3);
    CHECK(col_of(c1[0].first, cfg) == 1);
    CHECK(col_of(c1[0].second, cfg) == -1);
    // (B): only (p,q) = (-1,1), r runs over I_4
    auto bt = condition_B(1, 3, cfg);
    CHECK(bt.size() == 4);
    for (auto& t : bt) {
        CHECK(row_of(t.a2, cfg) == 1);
        CHECK(row_of(t.b1, cfg) == 3);
        CHECK(row_of(t.a1, cfg) == row_of(t.b2, cfg));
        CHECK(col_of(t.a1, cfg) < col_of(t.a2, cfg));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrect/walgebra.hpp"

using namespace wrect;

namespace {

VAState rand_state(std::mt19937& rng, const VAAlgebra& alg, int max_wt) {
    std::uniform_int_distribution<int> gen(0, alg.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    VAState v = VAState::vacuum(Scalar(1));
    int budget = std::uniform_int_distribution<int>(0, max_wt)(rng);
    while (budget > 0) {
        int d = std::uniform_int_distribution<int>(1, budget)(rng);
        v = mode_apply(alg, gen(rng), -d, v);
        budget -= d;
    }
    return v * Scalar(coeff(rng));
}

int state_parity(const VAAlgebra& alg, const VAState& v) {
    int p = -1;
    for (auto& [m, c] : v.terms) {
        int mp = 0;
        for (auto& f : m) mp ^= alg.parity(f.gen);
        if (p < 0) p = mp;
        if (p != mp) return -1;  // mixed
    }
    return p < 0 ? 0 : p;
}

}  // namespace

TEST_CASE("vacuum and unit laws") {
    Config cfg(4, 2);
    WContext w(cfg);
    const BAlgebra& B = w.b();
    VAState vac = VAState::vacuum();
    VAState g = mode_apply(B, 0, -1, vac);
    CHECK(mode_apply(B, 0, 0, vac).is_zero());
    CHECK(mode_apply(B, 0, 3, vac).is_zero());
    CHECK(normal_product(B, vac, g) == g);
    CHECK(normal_product(B, g, vac) == g);
    // (f[-1]|0>) . (f[-1]|0>) = f[-1]f[-1]|0>
    VAState sq = normal_product(B, g, g);
    REQUIRE(sq.terms.size() == 1);
    CHECK(sq.terms.begin()->first == VAMono{{0, 1}, {0, 1}});
}

TEST_CASE("OPE poles of currents") {
    Config cfg(4, 2);
    WContext w(cfg);
    const BAlgebra& B = w.b();
    for (int x = 0; x < B.size(); x += 5)
        for (int y = 0; y < B.size(); y += 7) {
            VAState xs = mode_apply(B, x, -1, VAState::vacuum());
            VAState ys = mode_apply(B, y, -1, VAState::vacuum());
            // first-order pole: bracket at depth 1
            VAState p0 = nth_product(B, xs, 0, ys);
            VAState expect;
            for (auto& [z, c] : B.bracket(x, y)) expect += mode_apply(B, z, -1, VAState::vacuum()) * c;
            CHECK(p0 == expect);
            // second-order pole: kappa
            VAState p1 = nth_product(B, xs, 1, ys);
            CHECK(p1 == VAState::vacuum(B.form(x, y)));
            CHECK(nth_product(B, xs, 2, ys).is_zero());
            CHECK(nth_product(B, xs, 3, ys).is_zero());
        }
}

TEST_CASE("translation operator") {
    Config cfg(4, 2);
    WContext w(cfg);
    const BAlgebra& B = w.b();
    VAState vac = VAState::vacuum();
    CHECK(translate(B, vac).is_zero());
    VAState x1 = mode_apply(B, 2, -1, vac);
    CHECK(translate(B, x1) == mode_apply(B, 2, -2, vac));
    VAState xy = mode_apply(B, 2, -1, mode_apply(B, 5, -1, vac));
    VAState expect = mode_apply(B, 2, -2, mode_apply(B, 5, -1, vac)) + mode_apply(B, 2, -1, mode_apply(B, 5, -2, vac));
    CHECK(translate(B, xy) == expect);
    // translation covariance: (d u)_(s) v = -s u_(s-1) v on random states
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        VAState u = rand_state(rng, B, 2), v = rand_state(rng, B, 2);
        for (int s = 0; s <= 3; ++s) {
            VAState lhs = nth_product(B, translate(B, u), s, v);
            VAState rhs = nth_product(B, u, s - 1, v) * Scalar(-s);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weight additivity") {
    Config cfg(4, 2);
    WContext w(cfg);
    const BAlgebra& B = w.b();
    std::mt19937 rng(99);
    for (int t = 0; t < 12; ++t) {
        // homogeneous inputs
        VAState u = rand_state(rng, B, 3), v = rand_state(rng, B, 2);
        if (u.is_zero() || v.is_zero()) continue;
        int wu = max_weight(u), wv = max_weight(v);
        bool hom = true;
        for (auto& [m, c] : u.terms) hom &= (weight(m) == wu);
        for (auto& [m, c] : v.terms) hom &= (weight(m) == wv);
        if (!hom) continue;
        for (int s = -2; s <= 4; ++s) {
            VAState p = nth_product(B, u, s, v);
            for (auto& [m, c] : p.terms) CHECK(weight(m) == wu + wv - s - 1);
        }
    }
}

TEST_CASE("skew symmetry") {
    // u_(s) v = sum_j (-1)^{s+1+j+p(u)p(v)} d^j (v_(s+j) u) / j!
    Config cfg(4, 2);
    WContext w(cfg);
    const AAlgebra& A = w.a();
    std::mt19937 rng(31337);
    for (int t = 0; t < 14; ++t) {
        VAState u = rand_state(rng, A, 2), v = rand_state(rng, A, 2);
        int pu = state_parity(A, u), pv = state_parity(A, v);
        if (pu < 0 || pv < 0) continue;
        int bound = max_weight(u) + max_weight(v);
        for (int s = -1; s <= 2; ++s) {
            VAState lhs = nth_product(A, u, s, v);
            VAState rhs;
            for (int j = 0; s + j <= bound; ++j) {
                VAState inner = nth_product(A, v, s + j, u);
                if (inner.is_zero()) continue;
                int sign = ((s + 1 + j) % 2 == 0 ? 1 : -1) * ((pu && pv) ? -1 : 1);
                rhs += translate_pow(A, inner, j) * Scalar(sign);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("borcherds commutator") {
    // [u_(m), v_(s)] x = sum_j C(m,j) (u_(j) v)_(m+s-j) x
    Config cfg(4, 2);
    WContext w(cfg);
    const AAlgebra& A = w.a();
    std::mt19937 rng(2024);
    for (int t = 0; t < 10; ++t) {
        VAState u = rand_state(rng, A, 2), v = rand_state(rng, A, 2), x = rand_state(rng, A, 2);
        int pu = state_parity(A, u), pv = state_parity(A, v);
        if (pu < 0 || pv < 0) continue;
        int bound = max_weight(u) + max_weight(v);
        for (int m = 0; m <= 2; ++m)
            for (int s = -1; s <= 1; ++s) {
                VAState lhs = nth_product(A, u, m, nth_product(A, v, s, x));
                VAState vux = nth_product(A, v, s, nth_product(A, u, m, x));
                lhs = lhs - vux * Scalar((pu && pv) ? -1 : 1);
                VAState rhs;
                for (int j = 0; j <= bound; ++j) {
                    VAState uv = nth_product(A, u, j, v);
                    if (uv.is_zero()) continue;
                    rhs += nth_product(A, uv, m + s - j, x) * Scalar(binom(m, j));
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("odd square zero") {
    Config cfg(4, 2);
    WContext w(cfg);
    const AAlgebra& A = w.a();
    int psi = A.num_j();  // first odd generator
    REQUIRE(A.parity(psi) == 1);
    VAState v = mode_apply(A, psi, -1, VAState::vacuum());
    CHECK(mode_apply(A, psi, -1, v).is_zero());
    VAState two = mode_apply(A, psi, -2, mode_apply(A, psi, -2, mode_apply(A, 0, -1, VAState::vacuum())));
    CHECK(two.is_zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrect/scalar.hpp"

using namespace wrect;

namespace {
Scalar rand_scalar(std::mt19937& rng, int depth = 0) {
    std::uniform_int_distribution<int> pick(0, depth > 2 ? 6 : 8);
    switch (pick(rng)) {
        case 0: return Scalar::alpha();
        case 1: return Scalar::hbar();
        case 2: return Scalar::eps1();
        case 3: return Scalar::eps2();
        case 4: return Scalar(std::uniform_int_distribution<int>(-4, 4)(rng));
        case 5: return Scalar::a0();
        case 6: return Scalar(std::uniform_int_distribution<int>(1, 3)(rng));
        case 7: return rand_scalar(rng, depth + 1) + rand_scalar(rng, depth + 1);
        default: return rand_scalar(rng, depth + 1) * rand_scalar(rng, depth + 1);
    }
}
}  // namespace

TEST_CASE("ring basics") {
    Scalar a = Scalar::alpha(), h = Scalar::hbar();
    CHECK(a * h + h * a == Scalar(2) * a * h);
    CHECK((a - a).is_zero());
    CHECK(a * Scalar(0) == Scalar(0));
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("theorem 1.1 parameter relations") {
    auto b = eps_bindings(4);
    // eps1 + eps2 = hbar after substitution
    Scalar sum = (Scalar::eps1() + Scalar::eps2()).substitute(b);
    CHECK(sum == Scalar::hbar());
    CHECK(Scalar::eps1().substitute(b) == Scalar(0) - Scalar::alpha() * Scalar::hbar() / Scalar(4));
}

TEST_CASE("xi_r values") {
    // xi_1 = (3 alpha + 1) hbar / 2
    Scalar expect = (Scalar(3) * Scalar::alpha() + Scalar(1)) * Scalar::hbar() / Scalar(2);
    CHECK(Scalar::xi(1) == expect);
}

TEST_CASE("substitution") {
    std::map<Var, Scalar> kill_alpha{{VAR_ALPHA, Scalar(0)}};
    CHECK((Scalar::alpha() * Scalar::hbar()).substitute(kill_alpha).is_zero());
    CHECK(Scalar::hbar().substitute({}) == Scalar::hbar());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 60; ++t) {
        Scalar x = rand_scalar(rng), y = rand_scalar(rng), z = rand_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("division cancels exactly") {
    std::mt19937 rng(999);
    for (int t = 0; t < 40; ++t) {
        Scalar x = rand_scalar(rng), y = rand_scalar(rng);
        if (y.is_zero()) continue;
        Scalar q = x / y;
        CHECK(q * y == x);
    }
    // canonical form has gcd 1: (a^2 h) / (a h) reduces to a
    Scalar r = (Scalar::alpha() * Scalar::alpha() * Scalar::hbar()) / (Scalar::alpha() * Scalar::hbar());
    CHECK(r == Scalar::alpha());
}

TEST_CASE("print and parse round trip") {
    std::mt19937 rng(777);
    for (int t = 0; t < 40; ++t) {
        Scalar x = rand_scalar(rng);
        if (t % 3 == 0) {
            Scalar y = rand_scalar(rng);
            if (!y.is_zero()) x = x / y;
        }
        CHECK(Scalar::parse(x.str()) == x);
    }
    CHECK(Scalar::parse("(3*alpha+1)*hbar/2") == Scalar::xi(1));
    CHECK(Scalar::parse("(3*α+1)*ħ/2") == Scalar::xi(1));
    CHECK(Scalar::parse("a0^2 - eps1*eps2") == Scalar::a0() * Scalar::a0() - Scalar::eps1() * Scalar::eps2());
}

TEST_CASE("generalized binomial") {
    CHECK(binom(-1, 3) == Rat(-1));
    CHECK(binom(-2, 2) == Rat(3));
    CHECK(binom(3, 2) == Rat(3));
    CHECK(binom(0, 0) == Rat(1));
    CHECK(binom(2, 5) == Rat(0));
}

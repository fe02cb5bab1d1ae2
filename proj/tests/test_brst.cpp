#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "wrect/brst_checks.hpp"

using namespace wrect;

namespace {
int count_fail(const ReportSet& rs, const std::string& prefix) {
    int k = 0;
    for (auto& r : rs.reports)
        if (!r.pass && r.check.rfind(prefix, 0) == 0) ++k;
    return k;
}
int count_all(const ReportSet& rs, const std::string& prefix) {
    int k = 0;
    for (auto& r : rs.reports)
        if (r.check.rfind(prefix, 0) == 0) ++k;
    return k;
}
}  // namespace

TEST_CASE("d0 annihilates the W generators (n=4, l=2 and l=4)") {
    for (int l : {2, 4}) {
        WContext w(Config(4, l));
        ReportSet rs = check_d0_kernel(w);
        CHECK(rs.reports.size() == 32);
        CHECK(rs.all_pass());
    }
}

TEST_CASE("d0 specializations") {
    WContext w(Config(4, 2));
    // d0 of zero is zero, d0(|0>) = 0
    CHECK(w.d0(VAState()).is_zero());
    CHECK(w.d0(VAState::vacuum()).is_zero());
    // n=4, l=2: d0(f_{5,7}[-1]) = -psi_{f_{5,-1}}[-1]
    VAState d = w.d0_gen(5, 7);
    VAState expect = w.a().psi_current(SOElement::f(5, -1)) * Scalar(-1);
    CHECK(d == expect);
    // the alpha psi[-2] term appears exactly once when col(a) = col(b) + 2:
    // the alpha-gradient of d0(f_{9,1}[-1]) is psi_{f_{9,1}}[-2]
    WContext w4(Config(4, 4));
    VAState d2 = w4.d0_gen(9, 1);  // col 3, col 1
    VAState grad;
    for (auto& [m, c] : d2.terms) {
        Scalar dc = c.substitute({{VAR_ALPHA, Scalar(1)}}) - c.substitute({{VAR_ALPHA, Scalar(0)}});
        grad.add(m, dc);
    }
    CHECK(grad == w4.a().apply_psi(SOElement::f(9, 1), 2, VAState::vacuum()));
}

TEST_CASE("[d0, d] = 0 on low weight states") {
    WContext w(Config(4, 2));
    const BAlgebra& B = w.b();
    const AAlgebra& A = w.a();
    std::vector<VAState> states;
    VAState vac = VAState::vacuum();
    for (int g = 0; g < B.size(); g += 3) {
        states.push_back(mode_apply(B, g, -1, vac));
        states.push_back(mode_apply(B, g, -3, vac));
        for (int h = 0; h < B.size(); h += 7) {
            states.push_back(mode_apply(B, g, -1, mode_apply(B, h, -2, vac)));
            states.push_back(mode_apply(B, g, -1, mode_apply(B, h, -1, mode_apply(B, g, -1, vac))));
        }
    }
    for (auto& v : states) {
        VAState lhs = w.d0(translate(B, v));
        VAState rhs = translate(A, w.d0(v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("d0 output has exactly one psi per monomial") {
    WContext w(Config(4, 4));
    const AAlgebra& A = w.a();
    VAState d = w.d0(w.W2(1, -1) + w.W1(3, 1) * Scalar::alpha());
    // W states are in the kernel; take something that is not
    VAState v = mode_apply(w.b(), 0, -1, mode_apply(w.b(), 5, -2, VAState::vacuum()));
    for (const VAState& state : {w.d0(v), d}) {
        for (auto& [m, c] : state.terms) {
            int psis = 0;
            for (auto& f : m) psis += A.parity(f.gen);
            CHECK(psis == 1);
        }
    }
}

TEST_CASE("lemma 2.4 checks, adjusted zeroth display exact") {
    WContext w(Config(4, 4));
    ReportSet rs = check_lemma24(w);
    CHECK(count_fail(rs, "lemma24.zeroth.adjusted") == 0);
    CHECK(count_fail(rs, "lemma24.s2") == 0);
    CHECK(count_fail(rs, "lemma24.s3") == 0);
    // printed zeroth display: fails exactly in the twisted corner cases
    CHECK(count_fail(rs, "lemma24.zeroth.printed") == 32);
    // every failing printed case carries a residual expression
    for (auto& r : rs.reports)
        if (!r.pass) CHECK(!r.residual.is_null());
}

TEST_CASE("W symmetry") {
    WContext w(Config(4, 4));
    for (int i : I_range(4))
        for (int j : I_range(4)) {
            int sgn = (hat(i) + hat(j)) % 2 == 0 ? 1 : -1;
            CHECK((w.W1(i, j) + w.W1(-j, -i) * Scalar(sgn)).is_zero());
            CHECK((w.W2(i, j) - w.W2(-j, -i) * Scalar(sgn)).is_zero());
        }
}

TEST_CASE("W1 term counts at l=2") {
    WContext w(Config(4, 2));
    // one current per column p in {-1, 1}, canonically folded to 2 or 1 terms
    VAState w1 = w.W1(1, 3);
    int precanonical = 0;
    for (int p : I_range(2)) (void)p, ++precanonical;
    CHECK(precanonical == 2);
    CHECK(!w1.is_zero());
}

TEST_CASE("appendix checks") {
    WContext w(Config(4, 4));
    ReportSet rs = check_appendix(w, 2);
    CHECK(count_fail(rs, "appendix.centralizer") == 0);
    CHECK(count_fail(rs, "appendix.y1") == 0);
    CHECK(count_fail(rs, "appendix.A1") == 0);
    // A.2 as printed does not hold; the reports carry residuals
    CHECK(count_fail(rs, "appendix.A2.printed") == count_all(rs, "appendix.A2.printed"));
}

TEST_CASE("centralizer s=0 members match W1 weight-1 parts") {
    WContext w(Config(4, 2));
    for (int i : I_range(4))
        for (int j : I_range(4)) {
            VAState e = w.b().current(w.centralizer_element(i, j, 0));
            CHECK(e == w.W1(i, j));
        }
}

TEST_CASE("sign table golden fixture") {
    Json table = sign_table(Config(4, 2));
    std::ifstream in(std::string(WRECT_TEST_DIR) + "/fixtures/sign_table_n4_l2.json");
    REQUIRE(in.good());
    Json frozen = Json::parse(in);
    CHECK(table == frozen);
}

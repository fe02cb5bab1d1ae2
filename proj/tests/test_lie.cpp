#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrect/linalg.hpp"
#include "wrect/so_elem.hpp"
#include "wrect/gl_elem.hpp"

using namespace wrect;

namespace {

// Independent oracle: expand f_{a,b} = e_{a,b} - e_{-b,-a} into gl(nl) matrix
// units and bracket there.
using GLMat = std::map<std::pair<int, int>, Rat>;

GLMat to_mat(const SOElement& x) {
    GLMat m;
    auto put = [&m](int i, int j, const Rat& c) {
        auto key = std::make_pair(i, j);
        m[key] += c;
        if (m[key] == 0) m.erase(key);
    };
    for (auto& [k, c] : x.terms) {
        REQUIRE(c.is_rational());
        put(k.first, k.second, c.rational_value());
        put(-k.second, -k.first, -c.rational_value());
    }
    return m;
}

GLMat mat_bracket(const GLMat& x, const GLMat& y) {
    GLMat m;
    auto put = [&m](int i, int j, const Rat& c) {
        auto key = std::make_pair(i, j);
        m[key] += c;
        if (m[key] == 0) m.erase(key);
    };
    for (auto& [kx, cx] : x)
        for (auto& [ky, cy] : y) {
            if (kx.second == ky.first) put(kx.first, ky.second, cx * cy);
            if (ky.second == kx.first) put(ky.first, kx.second, -cx * cy);
        }
    return m;
}

SOElement rand_so(std::mt19937& rng, const Config& cfg) {
    std::uniform_int_distribution<int> pos(0, cfg.nl() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto idx = I_range(cfg.nl());
    SOElement x;
    for (int t = 0; t < 3; ++t) x.add(idx[pos(rng)], idx[pos(rng)], Scalar(coeff(rng)));
    return x;
}

ScalarVec so_coords(const SOElement& x, const std::vector<FKey>& basis_keys) {
    ScalarVec v(basis_keys.size(), Scalar(0));
    for (auto& [k, c] : x.terms) {
        auto it = std::find(basis_keys.begin(), basis_keys.end(), k);
        REQUIRE(it != basis_keys.end());
        v[size_t(it - basis_keys.begin())] = c;
    }
    return v;
}

std::vector<FKey> all_canonical_keys(const Config& cfg) {
    std::vector<FKey> keys;
    for (int a : I_range(cfg.nl()))
        for (int b : I_range(cfg.nl())) {
            auto [key, sign] = canonical_fkey(a, b);
            if (sign == 1 && key == FKey{a, b}) keys.push_back(key);
        }
    return keys;
}

}  // namespace

TEST_CASE("canonical f relations") {
    SOElement zero = SOElement::f(3, -3);
    CHECK(zero.is_zero());
    SOElement s = SOElement::f(1, 3) + SOElement::f(-3, -1);
    CHECK(s.is_zero());
    SOElement single = SOElement::f(5, 7);
    CHECK(single.terms.size() == 1);
    CHECK(single.terms.begin()->first == FKey{5, 7});
}

TEST_CASE("bracket matches matrix unit oracle") {
    Config cfg(4, 2);
    // generic example from the closed form
    SOElement r = bracket_so(SOElement::f(1, 3), SOElement::f(3, 5));
    CHECK(r == SOElement::f(1, 5));
    std::mt19937 rng(4242);
    for (int t = 0; t < 60; ++t) {
        SOElement x = rand_so(rng, cfg), y = rand_so(rng, cfg);
        CHECK(to_mat(bracket_so(x, y)) == mat_bracket(to_mat(x), to_mat(y)));
    }
}

TEST_CASE("bracket antisymmetry and Jacobi") {
    Config cfg(4, 2);
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        SOElement x = rand_so(rng, cfg), y = rand_so(rng, cfg), z = rand_so(rng, cfg);
        CHECK(bracket_so(x, x).is_zero());
        SOElement jac = bracket_so(x, bracket_so(y, z)) + bracket_so(y, bracket_so(z, x)) + bracket_so(z, bracket_so(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("kappa values") {
    Config cfg(4, 2);
    // generic off-diagonal pair: alpha
    CHECK(form_f(FormKind::Kappa, {1, 3}, {3, 1}, cfg) == Scalar::alpha());
    // diagonal pair with equal columns: 1
    CHECK(form_f(FormKind::Kappa, {1, 1}, {3, 3}, cfg) == Scalar(1));
    // symmetry on all basis pairs
    auto keys = all_canonical_keys(cfg);
    for (auto& x : keys)
        for (auto& y : keys) {
            CHECK(form_f(FormKind::Kappa, x, y, cfg) == form_f(FormKind::Kappa, y, x, cfg));
            CHECK(form_f(FormKind::Paren, x, y, cfg) == form_f(FormKind::Paren, y, x, cfg));
        }
}

TEST_CASE("kappa invariance on b triples") {
    // kappa([u,v],w) = kappa(u,[v,w]) exhaustively on basis triples of b
    Config cfg(4, 2);
    std::vector<FKey> bkeys;
    for (auto& k : all_canonical_keys(cfg))
        if (fkey_in_b(k, cfg)) bkeys.push_back(k);
    for (auto& u : bkeys)
        for (auto& v : bkeys)
            for (auto& w : bkeys) {
                SOElement uu = SOElement::f(u.first, u.second);
                SOElement vv = SOElement::f(v.first, v.second);
                SOElement ww = SOElement::f(w.first, w.second);
                Scalar lhs = form_so(FormKind::Kappa, bracket_so(uu, vv), ww, cfg);
                Scalar rhs = form_so(FormKind::Kappa, uu, bracket_so(vv, ww), cfg);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("nilpotent f") {
    Config cfg(4, 2);
    SOElement f = nilpotent_f(cfg);
    // first sum empty at l=2; second contributes rows 1,3 at col pair (1,-1)
    CHECK(f.terms.size() == 2);
    for (auto& [k, c] : f.terms) {
        CHECK(fkey_grade(k, cfg) == -2);
        CHECK(c == Scalar(1));
    }
    Config cfg44(4, 4);
    SOElement f44 = nilpotent_f(cfg44);
    for (auto& [k, c] : f44.terms) CHECK(fkey_grade(k, cfg44) == -2);
}

TEST_CASE("grading dimension count") {
    // dim b + dim(positive grades) = dim so(nl): 22 + 6 = 28 for n=4, l=2
    Config cfg(4, 2);
    int dim_b = 0, dim_pos = 0;
    for (auto& k : all_canonical_keys(cfg)) (fkey_in_b(k, cfg) ? dim_b : dim_pos)++;
    CHECK(dim_b == 22);
    CHECK(dim_pos == 6);
    CHECK(dim_b + dim_pos == 28);
}

TEST_CASE("super bracket") {
    Config cfg(4, 2);
    std::mt19937 rng(77);
    SOElement u = project_b(rand_so(rng, cfg), cfg);
    SOElement v = project_c(rand_so(rng, cfg), cfg);
    SOElement w = project_c(rand_so(rng, cfg), cfg);
    // [psi, psi] = 0
    SuperElement pv = SuperElement::psi(v), pw = SuperElement::psi(w);
    CHECK(super_bracket(pv, pw, cfg).is_zero());
    // [J_u, psi_v] = psi_[u,v] (projected to c)
    SuperElement ju = SuperElement::J(u);
    SuperElement r = super_bracket(ju, pv, cfg);
    CHECK(r.j_part.is_zero());
    CHECK(r.psi_part == project_c(bracket_so(u, v), cfg));
    // [J,J] matches bracket_so
    SuperElement jv = SuperElement::J(project_b(rand_so(rng, cfg), cfg));
    CHECK(super_bracket(ju, jv, cfg).j_part == bracket_so(u, jv.j_part));
    // kappa~ vanishes on psi
    CHECK(kappa_tilde(pv, pw, cfg).is_zero());
    CHECK(kappa_tilde(ju, pv, cfg).is_zero());
}

TEST_CASE("symmetric pair") {
    int n = 4;
    auto kb = k_basis(n);
    CHECK(kb.size() == 10);  // dim sp(4)
    // theta is an involution fixing k pointwise
    for (auto& x : kb) CHECK(theta(x) == x);
    auto mb = m_basis(n);
    for (auto& x : mb) CHECK(theta(x) == -x);
    CHECK(kb.size() + mb.size() == 15);  // sl(4)
    for (auto& x : sl_basis(n)) CHECK(theta(theta(x)) == x);
}

TEST_CASE("lemma 4.3 m is reached from the H differences") {
    int n = 4;
    auto kb = k_basis(n);
    auto idx = I_range(n);
    // collect [H_i - H_{-i-2}, k] and [[H_i - H_{-i-2}, k], k'] and check m lies
    // in their span
    std::vector<GLElement> reached;
    for (int i : idx) {
        if (i == n - 1) continue;
        GLElement h = H(i) - H(-i - 2);
        for (auto& x : kb) {
            GLElement b1 = bracket_gl(h, x);
            if (!b1.is_zero()) reached.push_back(b1);
            for (auto& y : kb) {
                GLElement b2 = bracket_gl(b1, y);
                if (!b2.is_zero()) reached.push_back(b2);
            }
        }
    }
    auto coords = [&](const GLElement& x) {
        ScalarVec v;
        for (int i : idx)
            for (int j : idx) {
                auto it = x.terms.find({i, j});
                v.push_back(it == x.terms.end() ? Scalar(0) : it->second);
            }
        return v;
    };
    ScalarMat span;
    for (auto& x : reached) span.push_back(coords(x));
    for (auto& m : m_basis(n)) CHECK(in_span(span, coords(m)));
}

TEST_CASE("paper display in lemma 4.3 proof") {
    // [m_gen(i,j), k_gen(j,i)] = e_{i,i} + e_{-i,-i} - e_{j,j} - e_{-j,-j}
    int n = 4;
    for (int i : I_range(n))
        for (int j : I_range(n)) {
            if (i == j || i == -j) continue;
            GLElement lhs = bracket_gl(m_gen(i, j), k_gen(j, i));
            GLElement rhs = GLElement::e(i, i) + GLElement::e(-i, -i) - GLElement::e(j, j) - GLElement::e(-j, -j);
            CHECK(lhs == rhs);
        }
}

#include "wrect/gl_elem.hpp"

#include "wrect/linalg.hpp"

namespace wrect {

GLElement bracket_gl(const GLElement& x, const GLElement& y) {
    GLElement r;
    for (auto& [kx, cx] : x.terms)
        for (auto& [ky, cy] : y.terms) {
            Scalar c = cx * cy;
            if (kx.second == ky.first) r.add(kx.first, ky.second, c);
            if (ky.second == kx.first) r.add(ky.first, kx.second, -c);
        }
    return r;
}

Scalar trace_form(const GLElement& x, const GLElement& y) {
    Scalar v(0);
    for (auto& [kx, cx] : x.terms)
        for (auto& [ky, cy] : y.terms)
            if (kx.second == ky.first && ky.second == kx.first) v += cx * cy;
    return v;
}

Scalar trace(const GLElement& x) {
    Scalar v(0);
    for (auto& [k, c] : x.terms)
        if (k.first == k.second) v += c;
    return v;
}

GLElement theta(const GLElement& x) {
    GLElement r;
    for (auto& [k, c] : x.terms) {
        int sign = (hat(k.first) + hat(k.second)) % 2 == 0 ? 1 : -1;
        r.add(-k.second, -k.first, c * Scalar(-sign));
    }
    return r;
}

GLElement k_gen(int i, int j) {
    int sign = (hat(i) + hat(j)) % 2 == 0 ? 1 : -1;
    GLElement x = GLElement::e(i, j);
    x.add(-j, -i, Scalar(-sign));
    return x;
}

GLElement m_gen(int i, int j) {
    int sign = (hat(i) + hat(j)) % 2 == 0 ? 1 : -1;
    GLElement x = GLElement::e(i, j);
    x.add(-j, -i, Scalar(sign));
    return x;
}

GLElement H(int i) {
    GLElement x = GLElement::e(i, i);
    x.add(i + 2, i + 2, Scalar(-1));
    return x;
}

namespace {

ScalarVec coords(const GLElement& x, int n) {
    ScalarVec v;
    v.reserve(size_t(n) * size_t(n));
    for (int i : I_range(n))
        for (int j : I_range(n)) {
            auto it = x.terms.find({i, j});
            v.push_back(it == x.terms.end() ? Scalar(0) : it->second);
        }
    return v;
}

std::vector<GLElement> reduce_to_basis(const std::vector<GLElement>& gens, int n) {
    std::vector<GLElement> basis;
    ScalarMat rows;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        ScalarVec v = coords(g, n);
        if (!rows.empty() && in_span(rows, v)) continue;
        rows.push_back(v);
        basis.push_back(g);
    }
    return basis;
}

}  // namespace

std::vector<GLElement> k_basis(int n) {
    std::vector<GLElement> gens;
    for (int i : I_range(n))
        for (int j : I_range(n)) gens.push_back(k_gen(i, j));
    return reduce_to_basis(gens, n);
}

std::vector<GLElement> m_basis(int n) {
    std::vector<GLElement> gens;
    for (int i : I_range(n)) {
        if (i == n - 1) continue;
        gens.push_back(H(i) - H(-i - 2));
    }
    for (int i : I_range(n))
        for (int j : I_range(n))
            if (i != j) gens.push_back(m_gen(i, j));
    return reduce_to_basis(gens, n);
}

std::vector<GLElement> sl_basis(int n) {
    std::vector<GLElement> gens;
    for (int i : I_range(n))
        for (int j : I_range(n)) {
            if (i != j) {
                gens.push_back(GLElement::e(i, j));
            } else if (i != n - 1) {
                gens.push_back(H(i));
            }
        }
    return reduce_to_basis(gens, n);
}

}  // namespace wrect

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wrect/index.hpp"
#include "wrect/scalar.hpp"

namespace wrect {

// Element of gl(n) with matrix-unit keys e_{i,j}, i,j in I_n.
using EKey = std::pair<int, int>;

class GLElement {
  public:
    std::map<EKey, Scalar> terms;

    GLElement() = default;
    static GLElement e(int i, int j, const Scalar& c = Scalar(1)) {
        GLElement x;
        x.add(i, j, c);
        return x;
    }

    void add(int i, int j, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find({i, j});
        if (it == terms.end()) {
            terms.emplace(EKey{i, j}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    GLElement operator+(const GLElement& o) const {
        GLElement r = *this;
        for (auto& [k, c] : o.terms) r.add(k.first, k.second, c);
        return r;
    }
    GLElement operator-() const {
        GLElement r;
        for (auto& [k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }
    GLElement operator-(const GLElement& o) const { return *this + (-o); }
    GLElement operator*(const Scalar& c) const {
        GLElement r;
        if (c.is_zero()) return r;
        for (auto& [k, s] : terms) r.terms.emplace(k, s * c);
        return r;
    }
    bool operator==(const GLElement& o) const { return terms == o.terms; }
};

GLElement bracket_gl(const GLElement& x, const GLElement& y);
Scalar trace_form(const GLElement& x, const GLElement& y);  // tr(xy)
Scalar trace(const GLElement& x);

// theta(e_{i,j}) = -(-1)^{hat i + hat j} e_{-j,-i}; k is the +1 eigenspace.
GLElement theta(const GLElement& x);

// k-generator e_{i,j} - (-1)^{hat i + hat j} e_{-j,-i}.
GLElement k_gen(int i, int j);
// m-generator e_{i,j} + (-1)^{hat i + hat j} e_{-j,-i}.
GLElement m_gen(int i, int j);
// H_i = e_{i,i} - e_{i+2,i+2}.
GLElement H(int i);

std::vector<GLElement> k_basis(int n);          // spanning set, reduced to a basis
std::vector<GLElement> m_basis(int n);          // basis of m = (-1)-eigenspace in sl(n)
std::vector<GLElement> sl_basis(int n);

}  // namespace wrect

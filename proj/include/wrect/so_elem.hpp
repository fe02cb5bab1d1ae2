#pragma once

#include <map>
#include <utility>

#include "wrect/index.hpp"
#include "wrect/scalar.hpp"

namespace wrect {

// Generator key for so(nl): the matrix f_{a,b} = e_{a,b} - e_{-b,-a}.
// The spanning set is redundant (f_{a,b} = -f_{-b,-a}, f_{a,-a} = 0); we fix
// the representative with (a,b) >= (-b,-a) lexicographically so that equality
// of elements is a plain map comparison.
using FKey = std::pair<int, int>;

// Returns the canonical key and the sign picked up by flipping, or sign 0 if
// the generator is zero (b = -a).
inline std::pair<FKey, int> canonical_fkey(int a, int b) {
    if (b == -a) return {{0, 0}, 0};
    FKey flipped{-b, -a};
    FKey given{a, b};
    if (given >= flipped) return {given, 1};
    return {flipped, -1};
}

// Sparse element of so(nl): canonical generator -> coefficient.
class SOElement {
  public:
    std::map<FKey, Scalar> terms;

    SOElement() = default;

    static SOElement f(int a, int b, const Scalar& coeff = Scalar(1)) {
        SOElement e;
        e.add(a, b, coeff);
        return e;
    }

    void add(int a, int b, const Scalar& coeff) {
        if (coeff.is_zero()) return;
        auto [key, sign] = canonical_fkey(a, b);
        if (sign == 0) return;
        Scalar c = sign == 1 ? coeff : -coeff;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }
    SOElement& operator+=(const SOElement& o) {
        for (auto& [k, c] : o.terms) add(k.first, k.second, c);
        return *this;
    }
    SOElement operator+(const SOElement& o) const {
        SOElement r = *this;
        r += o;
        return r;
    }
    SOElement operator-() const {
        SOElement r;
        for (auto& [k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }
    SOElement operator-(const SOElement& o) const { return *this + (-o); }
    SOElement operator*(const Scalar& c) const {
        SOElement r;
        if (c.is_zero()) return r;
        for (auto& [k, s] : terms) r.terms.emplace(k, s * c);
        return r;
    }
    bool operator==(const SOElement& o) const { return terms == o.terms; }
};

// grade(f_{a,b}) = col(b) - col(a); invariant under the representative flip.
inline int fkey_grade(const FKey& k, const Config& cfg) { return col_of(k.second, cfg) - col_of(k.first, cfg); }
inline bool fkey_in_b(const FKey& k, const Config& cfg) { return fkey_grade(k, cfg) <= 0; }
inline bool fkey_in_c(const FKey& k, const Config& cfg) { return fkey_grade(k, cfg) < 0; }
inline bool fkey_in_g0(const FKey& k, const Config& cfg) { return fkey_grade(k, cfg) == 0; }

// [f_{a,b}, f_{c,d}] on generators, expanded through matrix units.
SOElement bracket_f(int a, int b, int c, int d);
SOElement bracket_so(const SOElement& x, const SOElement& y);

// The rectangular nilpotent of the paper; every term lies in g_{-2}.
SOElement nilpotent_f(const Config& cfg);

enum class FormKind { Paren, Kappa };

// (.,.) with level k = alpha + 2 - (l-1)n, and kappa with the alpha shift.
Scalar form_f(FormKind kind, const FKey& x, const FKey& y, const Config& cfg);
Scalar form_so(FormKind kind, const SOElement& x, const SOElement& y, const Config& cfg);

// Element of the Lie superalgebra a: even J-part supported on b, odd psi-part
// supported on c.
struct SuperElement {
    SOElement j_part;
    SOElement psi_part;

    SuperElement() = default;
    static SuperElement J(const SOElement& u) {
        SuperElement e;
        e.j_part = u;
        return e;
    }
    static SuperElement psi(const SOElement& v) {
        SuperElement e;
        e.psi_part = v;
        return e;
    }
    bool is_zero() const { return j_part.is_zero() && psi_part.is_zero(); }
    SuperElement operator+(const SuperElement& o) const {
        SuperElement r;
        r.j_part = j_part + o.j_part;
        r.psi_part = psi_part + o.psi_part;
        return r;
    }
};

// Projection to c (kills non-negative grades), the psi_{f_v} = 0 convention.
SOElement project_c(const SOElement& x, const Config& cfg);
SOElement project_b(const SOElement& x, const Config& cfg);
SOElement project_g0(const SOElement& x, const Config& cfg);

// [J^u, J^v] = J^[u,v], [J^u, psi_v] = psi_[u,v] (truncated to c), [psi,psi]=0.
SuperElement super_bracket(const SuperElement& x, const SuperElement& y, const Config& cfg);

// kappa~ on a: kappa on the J-parts, zero whenever a psi is involved.
Scalar kappa_tilde(const SuperElement& x, const SuperElement& y, const Config& cfg);

}  // namespace wrect

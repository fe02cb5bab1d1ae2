#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrect {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// The coefficient ring: rational functions over Q in the five named
// indeterminates below. Everything else in the system is exact in this ring.
enum Var : int { VAR_ALPHA = 0, VAR_HBAR = 1, VAR_EPS1 = 2, VAR_EPS2 = 3, VAR_A0 = 4 };
constexpr int kNumVars = 5;

struct Mono {
    std::array<int16_t, kNumVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = int16_t(e[i] + o.e[i]);
        return r;
    }
    // Exact division; caller must know o divides *this.
    Mono operator/(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = int16_t(e[i] - o.e[i]);
        return r;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // Graded order, ties broken on exponents from a0 down to alpha.
    // Frozen so serialization is reproducible.
    bool operator<(const Mono& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        for (int i = kNumVars - 1; i >= 0; --i)
            if (e[i] != o.e[i]) return e[i] < o.e[i];
        return false;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
  public:
    std::map<Mono, Rat> terms;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms[Mono{}] = c;
    }
    static Poly var(Var v, int exp = 1) {
        Poly p;
        Mono m;
        m.e[v] = int16_t(exp);
        p.terms[m] = 1;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_one()); }
    Rat constant_value() const {
        if (terms.empty()) return Rat(0);
        return terms.begin()->second;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }
    int degree_in(Var v) const {
        int d = 0;
        for (auto& [m, c] : terms) d = std::max(d, int(m.e[v]));
        return d;
    }
    // Leading term under the frozen monomial order.
    std::pair<Mono, Rat> leading() const {
        auto it = std::prev(terms.end());
        return {it->first, it->second};
    }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        r -= o;
        return r;
    }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return terms == o.terms; }

    // Exact polynomial division; nullopt if the division is not exact.
    std::optional<Poly> divide_exact(const Poly& d) const;
};

// gcd over Q[alpha,hbar,eps1,eps2,a0], normalized with leading coefficient 1.
Poly poly_gcd(Poly a, Poly b);

// Exact rational function num/den, kept canonical: gcd(num, den) = 1 and the
// denominator is monic under the frozen monomial order. Zero is 0/1.
class Scalar {
  public:
    Scalar() : num_(), den_(Rat(1)) {}
    Scalar(int v) : num_(Rat(v)), den_(Rat(1)) {}           // NOLINT: implicit by design
    Scalar(const Rat& v) : num_(v), den_(Rat(1)) {}         // NOLINT
    Scalar(Poly n, Poly d);
    explicit Scalar(Poly n) : num_(std::move(n)), den_(Rat(1)) {}

    static Scalar alpha() { return Scalar(Poly::var(VAR_ALPHA)); }
    static Scalar hbar() { return Scalar(Poly::var(VAR_HBAR)); }
    static Scalar eps1() { return Scalar(Poly::var(VAR_EPS1)); }
    static Scalar eps2() { return Scalar(Poly::var(VAR_EPS2)); }
    static Scalar a0() { return Scalar(Poly::var(VAR_A0)); }
    // xi_r = ((2r+1)*alpha + 1)/2 * hbar, the evaluation parameter family.
    static Scalar xi(int r);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant() && num_.constant_value() == 1; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat rational_value() const { return num_.constant_value() / den_.constant_value(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order, for maps

    Scalar substitute(const std::map<Var, Scalar>& bindings) const;

    std::string str() const;
    static Scalar parse(const std::string& text);

  private:
    void canonicalize();
    Poly num_, den_;
};

inline Scalar operator*(const Rat& c, const Scalar& s) { return Scalar(c) * s; }

// Substitution of Theorem-1.1 type: eps1 = -alpha*hbar/n, eps2 = hbar + alpha*hbar/n.
std::map<Var, Scalar> eps_bindings(int n);
// hbar = eps1 + eps2, used when working on the Yangian side with eps symbolic.
std::map<Var, Scalar> hbar_binding();

// Generalized binomial C(a, r) for integer a (falling factorial definition).
Rat binom(long a, long r);

}  // namespace wrect

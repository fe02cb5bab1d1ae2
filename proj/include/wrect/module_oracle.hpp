#pragma once

#include "wrect/modes.hpp"

namespace wrect {

// Vacuum (induced from the trivial representation) lowest-weight module of the
// slotted current algebra, used as an independent evaluation oracle: every
// template sum acts by finitely many summands on a vector of bounded degree.
class CurrentModule {
  public:
    CurrentModule(std::shared_ptr<const CurrentStructure> cur, int slots)
        : cur_(std::move(cur)), slots_(slots) {}

    using Mono = std::vector<ModeFactor>;  // pow < 0, sorted
    struct MonoLess {
        bool operator()(const Mono& a, const Mono& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            for (size_t k = 0; k < a.size(); ++k)
                if (!(a[k] == b[k])) return a[k] < b[k];
            return false;
        }
    };
    struct Vec {
        std::map<Mono, Scalar, MonoLess> terms;
        bool is_zero() const { return terms.empty(); }
        void add(const Mono& m, const Scalar& c) {
            if (c.is_zero()) return;
            auto it = terms.find(m);
            if (it == terms.end()) {
                terms.emplace(m, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
        Vec& operator+=(const Vec& o) {
            for (auto& [m, c] : o.terms) add(m, c);
            return *this;
        }
        Vec operator+(const Vec& o) const {
            Vec r = *this;
            r += o;
            return r;
        }
        Vec operator-(const Vec& o) const { return *this + o * Scalar(-1); }
        Vec operator*(const Scalar& c) const {
            Vec r;
            if (c.is_zero()) return r;
            for (auto& [m, s] : terms) r.terms.emplace(m, s * c);
            return r;
        }
        bool operator==(const Vec& o) const { return terms == o.terms; }
    };

    static Vec highest_weight() {
        Vec v;
        v.terms.emplace(Mono{}, Scalar(1));
        return v;
    }
    static int degree(const Mono& m) {
        int d = 0;
        for (auto& f : m) d -= f.pow;
        return d;
    }
    static int max_degree(const Vec& v) {
        int d = 0;
        for (auto& [m, c] : v.terms) d = std::max(d, degree(m));
        return d;
    }

    Vec apply_mode(const ModeFactor& f, const Vec& v) const;
    Vec apply(const ModeExpr& e, const Vec& v) const;
    // All PBW basis monomials of degree <= deg (including the vacuum).
    std::vector<Vec> basis_upto(int deg) const;

  private:
    std::shared_ptr<const CurrentStructure> cur_;
    int slots_;
};

}  // namespace wrect

#pragma once

#include <memory>

#include "wrect/so_elem.hpp"
#include "wrect/vertex.hpp"

namespace wrect {

// V^kappa(b): currents are the canonical f_{a,b} spanning b (grade <= 0).
class BAlgebra : public VAAlgebra {
  public:
    explicit BAlgebra(const Config& cfg);

    int size() const override { return int(keys_.size()); }
    int parity(int) const override { return 0; }
    long rank(int g) const override { return ranks_[g]; }
    std::map<int, Scalar> bracket(int x, int y) const override;
    Scalar form(int x, int y) const override;
    int extra_degree(int g) const override { return grades_[g]; }
    std::string name(int g) const override;

    const Config& cfg() const { return cfg_; }
    const FKey& key(int g) const { return keys_[g]; }
    // id of the canonical representative, with the flip sign; -1 if zero.
    std::pair<int, int> gen_of(int a, int b) const;
    int id_of_key(const FKey& k) const { return index_.at(k); }

    // Linear combination of currents at depth 1.
    VAState current(const SOElement& x) const;
    // x[-depth] applied to v.
    VAState apply(const SOElement& x, int depth, const VAState& v) const;
    SOElement as_so(int g) const { return SOElement::f(keys_[g].first, keys_[g].second); }

  protected:
    Config cfg_;
    std::vector<FKey> keys_;
    std::vector<int> grades_;
    std::vector<long> ranks_;
    std::map<FKey, int> index_;
};

// V^kappa~(a): even J-copy of b plus odd psi-copy of c.
class AAlgebra : public VAAlgebra {
  public:
    explicit AAlgebra(const Config& cfg);

    int size() const override { return int(jkeys_.size() + pkeys_.size()); }
    int parity(int g) const override { return g >= int(jkeys_.size()) ? 1 : 0; }
    long rank(int g) const override { return ranks_[g]; }
    std::map<int, Scalar> bracket(int x, int y) const override;
    Scalar form(int x, int y) const override;
    int extra_degree(int g) const override { return grades_[g]; }
    std::string name(int g) const override;

    const Config& cfg() const { return cfg_; }
    int num_j() const { return int(jkeys_.size()); }
    bool is_psi(int g) const { return g >= num_j(); }
    const FKey& key(int g) const { return g < num_j() ? jkeys_[g] : pkeys_[g - num_j()]; }

    std::pair<int, int> j_gen_of(int a, int b) const;    // J_{f_{a,b}}
    std::pair<int, int> psi_gen_of(int a, int b) const;  // psi_{f_{a,b}}, 0 outside c

    VAState j_current(const SOElement& x) const;
    VAState psi_current(const SOElement& x) const;
    VAState apply_j(const SOElement& x, int depth, const VAState& v) const;
    VAState apply_psi(const SOElement& x, int depth, const VAState& v) const;

  private:
    Config cfg_;
    std::vector<FKey> jkeys_, pkeys_;
    std::vector<int> grades_;
    std::vector<long> ranks_;
    std::map<FKey, int> jindex_, pindex_;
};

// The two engines plus the W-algebra constructions of the paper.
class WContext {
  public:
    explicit WContext(const Config& cfg) : cfg_(cfg), b_(cfg), a_(cfg) {}

    const Config& cfg() const { return cfg_; }
    const BAlgebra& b() const { return b_; }
    const AAlgebra& a() const { return a_; }

    // W^{(1)}_{i,j} and W^{(2)}_{i,j} as states of V^kappa(b).
    VAState W1(int i, int j) const;
    VAState W2(int i, int j) const;
    VAState W(int r, int i, int j) const { return r == 1 ? W1(i, j) : W2(i, j); }

    // d_0 of a single current f_{a,b}[-1]|0> (zero unless f_{a,b} in b).
    VAState d0_gen(int a, int b) const;
    // d_0 on all of V^kappa(b), extended by [d_0, d] = 0 and the odd
    // derivation rule over the (-1)-product.
    VAState d0(const VAState& v) const;
    // Embedding V^kappa(b) -> V^kappa~(a), f_{a,b}[-m] -> J[-m].
    VAState iota(const VAState& v) const;

    // gamma-signed centralizer family: element for (i, j, s).
    SOElement centralizer_element(int i, int j, int s) const;
    // The spanning family over i, j in I_n and 0 <= s <= l-1.
    std::vector<SOElement> centralizer_family() const;

    // gamma-signed current sum over (C)^s with row(a) = rj, row(b) = ri.
    VAState gamma_sum_state(int rj, int ri, int s) const;

    // Z_{i,i} and V_{i,i} = W2_{i,i} - Z_{i,i} of the appendix.
    VAState Z(int i) const;

  private:
    VAState build_W1(int i, int j) const;
    VAState build_W2(int i, int j) const;

    Config cfg_;
    BAlgebra b_;
    AAlgebra a_;
    mutable std::map<std::tuple<int, int, int>, VAState> wcache_;
};

}  // namespace wrect

#pragma once

#include <functional>
#include <memory>
#include <stdexcept>

#include "wrect/report.hpp"
#include "wrect/walgebra.hpp"

namespace wrect {

// Structure constants of a current family: weight-one generators whose only
// nonzero products are the bracket (r = 0) and the 2-cocycle (r = 1). Mode
// algebras, template sums and the module oracle are generic over this.
class CurrentStructure {
  public:
    virtual ~CurrentStructure() = default;
    virtual int size() const = 0;
    virtual std::map<int, Scalar> bracket(int x, int y) const = 0;
    virtual Scalar form(int x, int y) const = 0;
    virtual std::string name(int g) const = 0;
};

// gl(n) currents e_{i,j} with [e_ij t^s, e_pq t^u] carrying the central values
// c_val (trace pairing) and y_val (identity pairing) on the level term.
class GLCurrents : public CurrentStructure {
  public:
    GLCurrents(int n, Scalar c_val, Scalar y_val);
    int size() const override { return n_ * n_; }
    std::map<int, Scalar> bracket(int x, int y) const override;
    Scalar form(int x, int y) const override;
    std::string name(int g) const override;

    int n() const { return n_; }
    int sym(int i, int j) const;            // e_{i,j}
    std::pair<int, int> pair_of(int g) const;

  private:
    int n_;
    Scalar c_, y_;
    std::vector<int> values_;  // I_n
};

// b-currents of V^kappa(b), viewed as a current structure; symbols coincide
// with the BAlgebra generator ids.
class BCurrents : public CurrentStructure {
  public:
    explicit BCurrents(const BAlgebra& b) : b_(&b) {}
    int size() const override { return b_->size(); }
    std::map<int, Scalar> bracket(int x, int y) const override { return b_->bracket(x, y); }
    Scalar form(int x, int y) const override { return b_->form(x, y); }
    std::string name(int g) const override { return b_->name(g); }

  private:
    const BAlgebra* b_;
};

struct ModeFactor {
    int slot;
    int sym;
    int pow;
    bool operator==(const ModeFactor& o) const { return slot == o.slot && sym == o.sym && pow == o.pow; }
    bool operator<(const ModeFactor& o) const {
        if (slot != o.slot) return slot < o.slot;
        if (sym != o.sym) return sym < o.sym;
        return pow < o.pow;
    }
};

using ModeMono = std::vector<ModeFactor>;

struct ModeMonoLess {
    bool operator()(const ModeMono& a, const ModeMono& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t k = 0; k < a.size(); ++k) {
            if (!(a[k] == b[k])) return a[k] < b[k];
        }
        return false;
    }
};

// Closed form sum over s >= 1 of  lsym t^{-s+c1} (slot lslot) rsym t^{s+c2}
// (slot rslot), the factors in this order. The window (c1, c2) is normalized
// so that equal tails share a key: c1 = min(0, c1+c2+1).
struct TemplateKey {
    int lslot, lsym, lc1;
    int rslot, rsym, rc2;
    bool operator<(const TemplateKey& o) const {
        return std::tie(lslot, lsym, lc1, rslot, rsym, rc2) <
               std::tie(o.lslot, o.lsym, o.lc1, o.rslot, o.rsym, o.rc2);
    }
    bool operator==(const TemplateKey& o) const {
        return std::tie(lslot, lsym, lc1, rslot, rsym, rc2) ==
               std::tie(o.lslot, o.lsym, o.lc1, o.rslot, o.rsym, o.rc2);
    }
};

struct NotNormalizable : std::runtime_error {
    explicit NotNormalizable(const std::string& what) : std::runtime_error(what) {}
};
struct DivergentSum : std::runtime_error {
    explicit DivergentSum(const std::string& what) : std::runtime_error(what) {}
};

// Element of the completed mode algebra: finite normally-ordered words in the
// current modes plus template sums.
class ModeExpr {
  public:
    std::map<ModeMono, Scalar, ModeMonoLess> finite;
    std::map<TemplateKey, Scalar> templates;

    ModeExpr() = default;
    static ModeExpr scalar(const Scalar& c) {
        ModeExpr e;
        e.add(ModeMono{}, c);
        return e;
    }
    static ModeExpr mode(int slot, int sym, int pow, const Scalar& c = Scalar(1)) {
        ModeExpr e;
        e.add(ModeMono{{slot, sym, pow}}, c);
        return e;
    }

    bool is_zero() const { return finite.empty() && templates.empty(); }
    void add(const ModeMono& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = finite.find(m);
        if (it == finite.end()) {
            finite.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) finite.erase(it);
        }
    }
    void add_template(const TemplateKey& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = templates.find(k);
        if (it == templates.end()) {
            templates.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) templates.erase(it);
        }
    }
    ModeExpr& operator+=(const ModeExpr& o) {
        for (auto& [m, c] : o.finite) add(m, c);
        for (auto& [k, c] : o.templates) add_template(k, c);
        return *this;
    }
    ModeExpr operator+(const ModeExpr& o) const {
        ModeExpr r = *this;
        r += o;
        return r;
    }
    ModeExpr operator-(const ModeExpr& o) const { return *this + o * Scalar(-1); }
    ModeExpr operator*(const Scalar& c) const {
        ModeExpr r;
        if (c.is_zero()) return r;
        for (auto& [m, s] : finite) r.finite.emplace(m, s * c);
        for (auto& [k, s] : templates) r.templates.emplace(k, s * c);
        return r;
    }
};

// A linear combination of currents placed in one slot.
using CurrentCombo = std::vector<std::pair<ModeFactor, Scalar>>;  // pow ignored

class ModeAlgebra {
  public:
    ModeAlgebra(std::shared_ptr<const CurrentStructure> cur, int slots)
        : cur_(std::move(cur)), slots_(slots) {}

    const CurrentStructure& currents() const { return *cur_; }
    int slots() const { return slots_; }

    // Canonical form: template windows aligned, finite words sorted by
    // (slot, sign class, power, symbol) with commutator corrections.
    ModeExpr normal_form(const ModeExpr& e) const;
    bool equal(const ModeExpr& a, const ModeExpr& b) const { return normal_form(a - b).is_zero(); }

    // Product; both operands finite (template * scalar is allowed).
    ModeExpr mul(const ModeExpr& a, const ModeExpr& b) const;

    // Lie bracket. The right operand must be a linear combination of single
    // modes when the left operand carries templates or longer words.
    ModeExpr bracket(const ModeExpr& a, const ModeExpr& b) const;

    // sum over s >= s0 of (lc combo) t^{-s+c1} (rc combo) t^{s+c2}; the left
    // factor is the decreasing one, as in every sum of the paper.
    ModeExpr window_sum(const CurrentCombo& lc, int c1, const CurrentCombo& rc, int c2, int s0,
                        const Scalar& coeff = Scalar(1)) const;
    // two-sided sum over s in Z of (lc) t^{-s+c1} (rc) t^{s+c2}.
    ModeExpr z_sum(const CurrentCombo& lc, int c1, const CurrentCombo& rc, int c2,
                   const Scalar& coeff = Scalar(1)) const;

    // Remap slots (for coproduct embeddings); f must be injective on use.
    ModeExpr map_slots(const ModeExpr& e, const std::function<int(int)>& f) const;
    // Element-level diagonal embedding: sum over target slots of the 1-slot
    // expression copied into that slot.
    ModeExpr diag_embed(const ModeExpr& e, int nslots) const;
    // Homomorphism-level expansion: every factor x^{(0)} becomes
    // sum_{r<nslots} x^{(r)} (the l-fold coproduct of a 1-slot expression).
    ModeExpr hom_embed(const ModeExpr& e, int nslots) const;

    Json to_json(const ModeExpr& e) const;

  private:
    ModeExpr bracket_modes(const ModeFactor& x, const ModeFactor& y) const;
    ModeExpr bracket_template_mode(const TemplateKey& key, const Scalar& coeff, const ModeFactor& m) const;
    void canonicalize_template(int lslot, int lsym, int c1, int rslot, int rsym, int c2, int s0,
                               const Scalar& coeff, ModeExpr& out) const;
    void sort_word(const ModeMono& word, const Scalar& coeff, ModeExpr& out) const;

    std::shared_ptr<const CurrentStructure> cur_;
    int slots_;
};

/******** slotted gl current vertex algebra (Miura target) ********/

// V of gl(n)^{tensor slots} currents with the two-parameter inner product
// (pair coefficient c_val, diagonal coefficient y_val). With c_val = alpha,
// y_val = 1 this is V^Gamma(L).
class GLSlotsVA : public VAAlgebra {
  public:
    GLSlotsVA(int n, int slots, Scalar c_val, Scalar y_val);
    int size() const override { return slots_ * base_.size(); }
    int parity(int) const override { return 0; }
    long rank(int g) const override { return g; }
    std::map<int, Scalar> bracket(int x, int y) const override;
    Scalar form(int x, int y) const override;
    std::string name(int g) const override;

    int gen(int slot, int i, int j) const;
    int slot_of(int g) const { return g / base_.size(); }
    int sym_of(int g) const { return g % base_.size(); }
    const GLCurrents& base() const { return base_; }

  private:
    GLCurrents base_;
    int slots_;
};

// Rewrites the mode (u) t^pow of a state into normally ordered current modes
// and template sums, modulo the relations (241) and |0> t^{-1} = 1. Supports
// vacuum, single-factor states of any depth, and quadratic states; anything
// deeper raises NotNormalizable.
ModeExpr rel241(const ModeAlgebra& ma, const VAAlgebra& va,
                const std::function<ModeFactor(int gen)>& adapt, const VAState& u, int pow);

}  // namespace wrect

#include "wrect/module_oracle.hpp"

namespace wrect {

namespace {
// module monomial factor order; negative powers only
std::tuple<int, int, int> mfkey(const ModeFactor& f) { return {f.slot, -f.pow, f.sym}; }
}  // namespace

CurrentModule::Vec CurrentModule::apply_mode(const ModeFactor& f, const Vec& v) const {
    Vec out;
    for (auto& [mono, coeff] : v.terms) {
        if (f.pow >= 0) {
            if (mono.empty()) continue;  // non-negative modes kill the vacuum
            ModeFactor lead = mono.front();
            Mono rest(mono.begin() + 1, mono.end());
            Vec w;
            w.add(rest, coeff);
            if (lead.slot != f.slot) {
                out += apply_mode(lead, apply_mode(f, w));
                continue;
            }
            // commute through: lead (f w) + [f, lead] w
            out += apply_mode(lead, apply_mode(f, w));
            ModeFactor br{f.slot, 0, f.pow + lead.pow};
            for (auto& [z, c] : cur_->bracket(f.sym, lead.sym)) {
                br.sym = z;
                out += apply_mode(br, w) * c;
            }
            if (f.pow + lead.pow == 0 && f.pow != 0) {
                Scalar cf = cur_->form(f.sym, lead.sym);
                if (!cf.is_zero()) out += w * (cf * Scalar(f.pow));
            }
        } else {
            if (mono.empty() || !(mfkey(f) > mfkey(mono.front()))) {
                Mono nm;
                nm.reserve(mono.size() + 1);
                nm.push_back(f);
                nm.insert(nm.end(), mono.begin(), mono.end());
                out.add(nm, coeff);
            } else {
                ModeFactor lead = mono.front();
                Mono rest(mono.begin() + 1, mono.end());
                Vec w;
                w.add(rest, coeff);
                out += apply_mode(lead, apply_mode(f, w));
                if (lead.slot == f.slot) {
                    ModeFactor br{f.slot, 0, f.pow + lead.pow};
                    for (auto& [z, c] : cur_->bracket(f.sym, lead.sym)) {
                        br.sym = z;
                        out += apply_mode(br, w) * c;
                    }
                }
            }
        }
    }
    return out;
}

CurrentModule::Vec CurrentModule::apply(const ModeExpr& e, const Vec& v) const {
    Vec out;
    for (auto& [mono, coeff] : e.finite) {
        Vec cur = v;
        for (auto it = mono.rbegin(); it != mono.rend() && !cur.is_zero(); ++it) cur = apply_mode(*it, cur);
        out += cur * coeff;
    }
    for (auto& [k, coeff] : e.templates) {
        int dmax = max_degree(v);
        // the right factor has power s + rc2 >= 0; it kills everything once
        // s + rc2 exceeds the degree
        for (int s = 1; s + k.rc2 <= dmax; ++s) {
            Vec cur = apply_mode(ModeFactor{k.rslot, k.rsym, s + k.rc2}, v);
            if (cur.is_zero()) continue;
            cur = apply_mode(ModeFactor{k.lslot, k.lsym, -s + k.lc1}, cur);
            out += cur * coeff;
        }
    }
    return out;
}

std::vector<CurrentModule::Vec> CurrentModule::basis_upto(int deg) const {
    // sorted factor sequences with total depth <= deg
    std::vector<ModeFactor> kinds;
    for (int slot = 0; slot < slots_; ++slot)
        for (int sym = 0; sym < cur_->size(); ++sym)
            for (int d = 1; d <= deg; ++d) kinds.push_back(ModeFactor{slot, sym, -d});
    std::sort(kinds.begin(), kinds.end(),
              [](const ModeFactor& a, const ModeFactor& b) { return mfkey(a) < mfkey(b); });
    std::vector<Vec> out;
    Mono cur;
    std::function<void(size_t, int)> rec = [&](size_t start, int budget) {
        Vec v;
        v.add(cur, Scalar(1));
        out.push_back(v);
        for (size_t k = start; k < kinds.size(); ++k) {
            int d = -kinds[k].pow;
            if (d > budget) continue;
            cur.push_back(kinds[k]);
            rec(k, budget - d);
            cur.pop_back();
        }
    };
    rec(0, deg);
    return out;
}

}  // namespace wrect

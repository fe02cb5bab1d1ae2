#include "wrect/vertex.hpp"

#include <sstream>

namespace wrect {

int max_weight(const VAState& v) {
    int w = 0;
    for (auto& [m, c] : v.terms) w = std::max(w, weight(m));
    return w;
}

namespace {

int mono_parity(const VAAlgebra& alg, const VAMono& m) {
    int p = 0;
    for (auto& f : m) p ^= alg.parity(f.gen);
    return p;
}

// Factor order for the PBW normal form: by algebra rank, then depth, then id.
bool factor_le(const VAAlgebra& alg, const VAFactor& a, const VAFactor& b) {
    long ra = alg.rank(a.gen), rb = alg.rank(b.gen);
    if (ra != rb) return ra < rb;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.gen <= b.gen;
}

}  // namespace

VAState mode_apply(const VAAlgebra& alg, int gen, int s, const VAState& v) {
    VAState out;
    for (auto& [mono, coeff] : v.terms) {
        if (s >= 0) {
            // Commute the positive (or zero) mode to the vacuum.
            if (mono.empty()) continue;
            VAFactor lead = mono.front();
            VAMono rest(mono.begin() + 1, mono.end());
            VAState w;
            w.add(rest, coeff);
            // (-1)^{p(g)p(lead)} lead . (g[s] w)
            VAState tail = mode_apply(alg, gen, s, w);
            if (!tail.is_zero()) {
                Scalar sign(alg.parity(gen) && alg.parity(lead.gen) ? -1 : 1);
                out += mode_apply(alg, lead.gen, -lead.depth, tail) * sign;
            }
            // [g, lead][s - m] w
            int k = s - lead.depth;
            for (auto& [z, c] : alg.bracket(gen, lead.gen)) {
                if (c.is_zero()) continue;
                out += mode_apply(alg, z, k, w) * c;
            }
            // central term s * d_{s,m} form(g, lead) w
            if (s == lead.depth && s != 0) {
                Scalar f = alg.form(gen, lead.gen);
                if (!f.is_zero()) out += w * (f * Scalar(s));
            }
        } else {
            int m = -s;
            VAFactor nf{gen, m};
            if (mono.empty() || factor_le(alg, nf, mono.front())) {
                if (!mono.empty() && alg.parity(gen) && nf == mono.front()) continue;  // odd square
                VAMono nm;
                nm.reserve(mono.size() + 1);
                nm.push_back(nf);
                nm.insert(nm.end(), mono.begin(), mono.end());
                out.add(nm, coeff);
            } else {
                VAFactor lead = mono.front();
                VAMono rest(mono.begin() + 1, mono.end());
                VAState w;
                w.add(rest, coeff);
                // g[-m] lead[-m1] = (-1)^{pp} lead[-m1] g[-m] + [g,lead][-m-m1]
                VAState tail = mode_apply(alg, gen, s, w);
                if (!tail.is_zero()) {
                    Scalar sign(alg.parity(gen) && alg.parity(lead.gen) ? -1 : 1);
                    out += mode_apply(alg, lead.gen, -lead.depth, tail) * sign;
                }
                int k = -m - lead.depth;
                for (auto& [z, c] : alg.bracket(gen, lead.gen)) {
                    if (c.is_zero()) continue;
                    out += mode_apply(alg, z, k, w) * c;
                }
            }
        }
    }
    return out;
}

VAState nth_product(const VAAlgebra& alg, const VAState& u, int s, const VAState& v) {
    VAState out;
    if (v.is_zero()) return out;
    int wv = max_weight(v);
    for (auto& [mono, coeff] : u.terms) {
        if (mono.empty()) {
            if (s == -1) out += v * coeff;
            continue;
        }
        // u-term = g[-m] w; treat the lead as the composite field
        // A = d^{m-1} g / (m-1)! so that A_{(-1)} w is the stored monomial.
        VAFactor lead = mono.front();
        int g = lead.gen, m = lead.depth;
        VAMono restm(mono.begin() + 1, mono.end());
        VAState w;
        w.add(restm, Scalar(1));
        int pw = mono_parity(alg, restm);
        int pa = alg.parity(g);
        int ww = weight(restm);

        // sum over j >= 0 of A_{(-1-j)} (w_{(s+j)} v)
        for (int j = 0; s + j <= ww + wv; ++j) {
            Rat c1 = binom(-1 - j, m - 1);
            if ((m - 1) % 2 != 0) c1 = -c1;
            if (c1 == 0) continue;
            VAState inner = nth_product(alg, w, s + j, v);
            if (inner.is_zero()) continue;
            out += mode_apply(alg, g, -(j + m), inner) * (coeff * Scalar(c1));
        }
        // Koszul sign (-1)^{p(A)p(w)} sum over j of w_{(s-1-j)} (A_{(j)} v)
        Scalar ksign((pa && pw) ? -1 : 1);
        for (int j = 0; j - m + 1 <= wv; ++j) {
            Rat c2 = binom(j, m - 1);
            if ((m - 1) % 2 != 0) c2 = -c2;
            if (c2 == 0) continue;
            VAState gv = mode_apply(alg, g, j - m + 1, v);
            if (gv.is_zero()) continue;
            VAState inner = nth_product(alg, w, s - 1 - j, gv);
            if (inner.is_zero()) continue;
            out += inner * (coeff * ksign * Scalar(c2));
        }
    }
    return out;
}

VAState translate(const VAAlgebra& alg, const VAState& v) {
    VAState out;
    for (auto& [mono, coeff] : v.terms) {
        for (size_t i = 0; i < mono.size(); ++i) {
            // derivation: raise the depth of factor i by one, weight m factor
            VAState rest = VAState::vacuum(coeff * Scalar(mono[i].depth));
            for (size_t k = mono.size(); k-- > 0;) {
                int d = mono[k].depth + (k == i ? 1 : 0);
                rest = mode_apply(alg, mono[k].gen, -d, rest);
            }
            out += rest;
        }
    }
    return out;
}

VAState translate_pow(const VAAlgebra& alg, VAState v, int k) {
    Rat fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    for (int i = 0; i < k; ++i) v = translate(alg, v);
    return v * Scalar(Rat(1) / fact);
}

int mono_extra_degree(const VAAlgebra& alg, const VAMono& m) {
    int d = 0;
    for (auto& f : m) d += alg.extra_degree(f.gen);
    return d;
}

int min_extra_degree(const VAAlgebra& alg, const VAState& v) {
    bool first = true;
    int d = 0;
    for (auto& [m, c] : v.terms) {
        int md = mono_extra_degree(alg, m);
        if (first || md < d) d = md;
        first = false;
    }
    return d;
}

VAState degree_slice_at_most(const VAAlgebra& alg, const VAState& v, int dmax) {
    VAState out;
    for (auto& [m, c] : v.terms)
        if (mono_extra_degree(alg, m) <= dmax) out.terms.emplace(m, c);
    return out;
}

std::string state_str(const VAAlgebra& alg, const VAState& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (auto& f : m) os << " " << alg.name(f.gen) << "[-" << f.depth << "]";
        if (m.empty()) os << " |0>";
    }
    return os.str();
}

}  // namespace wrect

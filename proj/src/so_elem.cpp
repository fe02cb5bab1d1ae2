#include "wrect/so_elem.hpp"

namespace wrect {

SOElement bracket_f(int a, int b, int c, int d) {
    // [f_{a,b}, f_{c,d}] = d_{b,c} f_{a,d} - d_{a,d} f_{c,b}
    //                      - d_{b+d,0} f_{a,-c} + d_{a+c,0} f_{-d,b}
    SOElement r;
    if (b == c) r.add(a, d, Scalar(1));
    if (a == d) r.add(c, b, Scalar(-1));
    if (b + d == 0) r.add(a, -c, Scalar(-1));
    if (a + c == 0) r.add(-d, b, Scalar(1));
    return r;
}

SOElement bracket_so(const SOElement& x, const SOElement& y) {
    SOElement r;
    for (auto& [kx, cx] : x.terms)
        for (auto& [ky, cy] : y.terms) {
            SOElement part = bracket_f(kx.first, kx.second, ky.first, ky.second);
            Scalar c = cx * cy;
            for (auto& [k, s] : part.terms) r.add(k.first, k.second, s * c);
        }
    return r;
}

SOElement nilpotent_f(const Config& cfg) {
    SOElement f;
    for (int a : I_range(cfg.nl())) {
        auto ra = decompose(a, cfg);
        for (int b : I_range(cfg.nl())) {
            auto rb = decompose(b, cfg);
            if (ra.row != rb.row || rb.col + 2 != ra.col) continue;
            if (ra.col >= 2 || (ra.col == 1 && ra.row > 0)) f.add(a, b, Scalar(1));
        }
    }
    return f;
}

Scalar form_f(FormKind kind, const FKey& x, const FKey& y, const Config& cfg) {
    int a1 = x.first, b1 = x.second, a2 = y.first, b2 = y.second;
    int pairing = (a1 == b2 && b1 == a2 ? 1 : 0) - (a1 + a2 == 0 && b1 + b2 == 0 ? 1 : 0);
    if (kind == FormKind::Paren) {
        // level k = alpha + 2 - (l-1)n
        Scalar k = Scalar::alpha() + Scalar(2 - (cfg.l - 1) * cfg.n);
        return k * Scalar(pairing);
    }
    Scalar v = Scalar::alpha() * Scalar(pairing);
    if (a1 == b1 && a2 == b2) {
        int c1 = col_of(a1, cfg), c2 = col_of(a2, cfg);
        v += Scalar((c1 == c2 ? 1 : 0) - (c1 + c2 == 0 ? 1 : 0));
    }
    return v;
}

Scalar form_so(FormKind kind, const SOElement& x, const SOElement& y, const Config& cfg) {
    Scalar v(0);
    for (auto& [kx, cx] : x.terms)
        for (auto& [ky, cy] : y.terms) v += form_f(kind, kx, ky, cfg) * cx * cy;
    return v;
}

SOElement project_c(const SOElement& x, const Config& cfg) {
    SOElement r;
    for (auto& [k, c] : x.terms)
        if (fkey_in_c(k, cfg)) r.terms.emplace(k, c);
    return r;
}

SOElement project_b(const SOElement& x, const Config& cfg) {
    SOElement r;
    for (auto& [k, c] : x.terms)
        if (fkey_in_b(k, cfg)) r.terms.emplace(k, c);
    return r;
}

SOElement project_g0(const SOElement& x, const Config& cfg) {
    SOElement r;
    for (auto& [k, c] : x.terms)
        if (fkey_in_g0(k, cfg)) r.terms.emplace(k, c);
    return r;
}

SuperElement super_bracket(const SuperElement& x, const SuperElement& y, const Config& cfg) {
    SuperElement r;
    r.j_part = bracket_so(x.j_part, y.j_part);
    // [J, psi] = psi_[u,v] truncated to c; [psi, psi] = 0.
    SOElement jpsi = bracket_so(x.j_part, y.psi_part) - bracket_so(y.j_part, x.psi_part);
    r.psi_part = project_c(jpsi, cfg);
    return r;
}

Scalar kappa_tilde(const SuperElement& x, const SuperElement& y, const Config& cfg) {
    return form_so(FormKind::Kappa, x.j_part, y.j_part, cfg);
}

}  // namespace wrect

#include "wrect/index.hpp"

namespace wrect {

std::vector<std::pair<int, int>> condition_A(int i, int j, const Config& cfg) {
    return condition_C(i, j, 1, cfg);
}

std::vector<std::pair<int, int>> condition_C(int i, int j, int s, const Config& cfg) {
    require_index(i, cfg.n, "condition_C(i)");
    require_index(j, cfg.n, "condition_C(j)");
    std::vector<std::pair<int, int>> out;
    for (int q : I_range(cfg.l)) {
        int p = q + 2 * s;  // col(a)
        if (!in_I(p, cfg.l)) continue;
        out.emplace_back(compose(i, p, cfg), compose(j, q, cfg));
    }
    return out;
}

std::vector<QuadTuple> condition_B(int i, int j, const Config& cfg) {
    require_index(i, cfg.n, "condition_B(i)");
    require_index(j, cfg.n, "condition_B(j)");
    std::vector<QuadTuple> out;
    auto cols = I_range(cfg.l);
    for (int p : cols)
        for (int q : cols) {
            if (!(p < q)) continue;
            for (int r : I_range(cfg.n)) {
                QuadTuple t;
                t.a1 = compose(r, p, cfg);
                t.b1 = compose(j, p, cfg);
                t.a2 = compose(i, q, cfg);
                t.b2 = compose(r, q, cfg);
                out.push_back(t);
            }
        }
    return out;
}

}  // namespace wrect

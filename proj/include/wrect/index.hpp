#pragma once

#include <stdexcept>
#include <vector>

namespace wrect {

// Global configuration. The index sets are I_N = {-N+1, -N+3, ..., N-1};
// every index in the system is a raw odd integer taken from one of these.
struct Config {
    int n = 4;          // so(nl) block count, even, >= 4
    int l = 2;          // Jordan block size, even
    int depth = 3;      // truncation depth for the module oracle
    int slot_count = 0; // tensor slots; defaults to l' = l/2

    Config() { validate(); }
    Config(int n_, int l_, int depth_ = 3, int slots = 0) : n(n_), l(l_), depth(depth_), slot_count(slots) {
        if (slot_count == 0) slot_count = l / 2;
        validate();
    }

    int lprime() const { return l / 2; }
    int nl() const { return n * l; }

    void validate() const {
        if (n < 4 || n % 2 != 0) throw std::domain_error("Config: n must be even and >= 4");
        if (l < 2 || l % 2 != 0) throw std::domain_error("Config: l must be even and positive");
        if (depth < 0) throw std::domain_error("Config: depth must be non-negative");
        if (slot_count < 1) throw std::domain_error("Config: slot_count must be positive");
    }
};

inline bool in_I(int value, int N) { return value >= -N + 1 && value <= N - 1 && ((value - (N - 1)) % 2 == 0); }

// All of I_N in increasing order.
inline std::vector<int> I_range(int N) {
    std::vector<int> out;
    out.reserve(N);
    for (int v = -N + 1; v <= N - 1; v += 2) out.push_back(v);
    return out;
}

inline void require_index(int value, int N, const char* what) {
    if (!in_I(value, N)) throw std::domain_error(std::string(what) + ": index not in I_" + std::to_string(N));
}

// hat(i) = 0 for i >= 0 and 1 for i < 0; hat(0) = 0 by convention.
inline int hat(int i) { return i < 0 ? 1 : 0; }

struct RowCol {
    int row;  // in I_n
    int col;  // in I_l
};

// Unique decomposition a = col*n + row with row in I_n, col in I_l.
inline RowCol decompose(int a, const Config& cfg) {
    require_index(a, cfg.nl(), "decompose");
    int n = cfg.n;
    int r1 = ((a - n) % (2 * n) + 2 * n) % (2 * n);
    int row = r1 <= n - 1 ? r1 : r1 - 2 * n;
    int col = (a - row) / n;
    return {row, col};
}

inline int row_of(int a, const Config& cfg) { return decompose(a, cfg).row; }
inline int col_of(int a, const Config& cfg) { return decompose(a, cfg).col; }
inline int compose(int row, int col, const Config& cfg) {
    require_index(row, cfg.n, "compose(row)");
    require_index(col, cfg.l, "compose(col)");
    return col * cfg.n + row;
}

// gamma_{a,b} = sum_{0<2u<=p-q} hat(q+2u) + hat(p)*hat(j) + hat(q)*hat(i) mod 2,
// with p = col(a), q = col(b), j = row(a), i = row(b). The sum walks the
// columns strictly between col(b) and col(a) (inclusive of col(a)); with the
// opposite bound the advertised spanning set fails to centralize f.
inline int gamma_sign(int a, int b, const Config& cfg) {
    auto ra = decompose(a, cfg), rb = decompose(b, cfg);
    int p = ra.col, q = rb.col, j = ra.row, i = rb.row;
    int total = hat(p) * hat(j) + hat(q) * hat(i);
    for (int u = 1; 2 * u <= p - q; ++u) total += hat(q + 2 * u);
    return total & 1;
}

/******** Appendix index conditions ********/
// Summation-domain enumerators mirroring the paper's sigma subscripts.

// (A)_{i,j}: pairs (a,b) with row(a)=i, row(b)=j, col(a)=col(b)+2.
std::vector<std::pair<int, int>> condition_A(int i, int j, const Config& cfg);

struct QuadTuple {
    int a1, b1, a2, b2;
};

// (B)_{i,j}: row(a2)=i, row(b1)=j, col(a1)=col(b1) < col(a2)=col(b2),
// row(a1)=row(b2).
std::vector<QuadTuple> condition_B(int i, int j, const Config& cfg);

// (C)^s_{i,j}: pairs (a,b) with row(a)=i, row(b)=j, col(a)=col(b)+2s.
std::vector<std::pair<int, int>> condition_C(int i, int j, int s, const Config& cfg);

// (D)^s_{i,j} ranges over the same tuples as (C)^s_{i,j} in different letters.
inline std::vector<std::pair<int, int>> condition_D(int i, int j, int s, const Config& cfg) {
    return condition_C(i, j, s, cfg);
}

}  // namespace wrect

#include "wrect/linalg.hpp"

namespace wrect {

int row_reduce(ScalarMat& rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Scalar inv = Scalar(1) / rows[r][c];
        for (size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            for (size_t k = c; k < cols; ++k) rows[i][k] = rows[i][k] - factor * rows[r][k];
        }
        ++r;
    }
    return int(r);
}

bool in_span(const ScalarMat& basis, const ScalarVec& v) {
    ScalarMat m = basis;
    int r0 = row_reduce(m);
    m.push_back(v);
    return row_reduce(m) == r0;
}

}  // namespace wrect

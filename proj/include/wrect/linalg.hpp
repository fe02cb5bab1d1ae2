#pragma once

#include <vector>

#include "wrect/scalar.hpp"

namespace wrect {

// Dense exact linear algebra over the fraction field Q(alpha,hbar,eps1,eps2,a0).
// Everything here is desk-scale; no pivoting strategy beyond first nonzero.
using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;  // row major

// Reduces rows in place to echelon form, returns the rank.
int row_reduce(ScalarMat& rows);

inline int rank(ScalarMat rows) { return row_reduce(rows); }

// Is v in the row span of basis?
bool in_span(const ScalarMat& basis, const ScalarVec& v);

}  // namespace wrect

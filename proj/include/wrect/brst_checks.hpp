#pragma once

#include "wrect/report.hpp"
#include "wrect/walgebra.hpp"

namespace wrect {

Json state_json(const VAAlgebra& alg, const VAState& v);

// Theorem 2.2: d_0(W^{(r)}_{i,j}) = 0 for r = 1,2 and all i,j in I_n.
ReportSet check_d0_kernel(const WContext& w);

// Lemma 2.4. The printed displays are checked verbatim (p(.) read as hat);
// mismatches are reported with the exact residual, never asserted. The
// zeroth-product display is additionally checked in the adjusted form with
// the twisted-term exponent hat(v)+hat(w), which is the variant that holds.
ReportSet check_lemma24(const WContext& w);

// Appendix A: centralizer family, eq. (y1), Lemmas A.1 and A.2.
ReportSet check_appendix(const WContext& w, int smax = 2);

// Composite sign exponent table (beta, beta1, beta2, gamma) for golden files.
Json sign_table(const Config& cfg);

}  // namespace wrect

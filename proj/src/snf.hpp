#pragma once

#include "matrix.hpp"

namespace gm {

// Smith normal form U*S*V = N of a nonsingular integer matrix.
// S is diagonal with positive entries s_1 | s_2 | ... | s_d and
// |det U| = |det V| = 1.
struct SmithResult {
    RatMatrix U;
    RatMatrix S;
    RatMatrix V;
};

SmithResult smith_normal_form(const RatMatrix& N);

}  // namespace gm

#include "snf.hpp"

#include <cstddef>

namespace gm {

namespace {

// Integer working copy with transform tracking. Row operations on A are
// mirrored by column operations on U (and vice versa for V) so that
// U*A*V = N stays true after every step.
struct SnfWork {
    size_t d;
    std::vector<Int> a;   // work matrix
    std::vector<Int> u;   // left transform
    std::vector<Int> v;   // right transform

    Int& A(size_t i, size_t j) { return a[i * d + j]; }
    Int& U(size_t i, size_t j) { return u[i * d + j]; }
    Int& V(size_t i, size_t j) { return v[i * d + j]; }

    void swap_rows(size_t i, size_t j) {
        for (size_t k = 0; k < d; ++k) std::swap(A(i, k), A(j, k));
        for (size_t k = 0; k < d; ++k) std::swap(U(k, i), U(k, j));
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t k = 0; k < d; ++k) std::swap(A(k, i), A(k, j));
        for (size_t k = 0; k < d; ++k) std::swap(V(i, k), V(j, k));
    }
    // row_i += c * row_j
    void add_row(size_t i, size_t j, const Int& c) {
        for (size_t k = 0; k < d; ++k) A(i, k) += c * A(j, k);
        for (size_t k = 0; k < d; ++k) U(k, j) -= c * U(k, i);
    }
    // col_j += c * col_i
    void add_col(size_t j, size_t i, const Int& c) {
        for (size_t k = 0; k < d; ++k) A(k, j) += c * A(k, i);
        for (size_t k = 0; k < d; ++k) V(i, k) -= c * V(j, k);
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < d; ++k) A(i, k) = -A(i, k);
        for (size_t k = 0; k < d; ++k) U(k, i) = -U(k, i);
    }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const RatMatrix& N) {
    const size_t d = N.dim();
    if (d == 0) fail_input("smith normal form of empty matrix");
    if (!N.is_integer_matrix()) fail_input("smith normal form requires integer entries");
    if (N.det() == 0) fail_input("smith normal form requires a nonsingular matrix");

    SnfWork w;
    w.d = d;
    w.a.resize(d * d);
    w.u.assign(d * d, 0);
    w.v.assign(d * d, 0);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) w.A(i, j) = rat_num(N.at(i, j));
    for (size_t i = 0; i < d; ++i) w.U(i, i) = w.V(i, i) = 1;

    for (size_t t = 0; t < d; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t,t).
            size_t pi = d, pj = d;
            for (size_t i = t; i < d; ++i)
                for (size_t j = t; j < d; ++j) {
                    if (w.A(i, j) == 0) continue;
                    if (pi == d || abs_int(w.A(i, j)) < abs_int(w.A(pi, pj))) { pi = i; pj = j; }
                }
            if (pi == d) fail_internal("singular block during smith reduction");
            if (pi != t) w.swap_rows(pi, t);
            if (pj != t) w.swap_cols(pj, t);

            bool clean = true;
            for (size_t i = t + 1; i < d; ++i) {
                if (w.A(i, t) == 0) continue;
                Int q = w.A(i, t) / w.A(t, t);
                if (q != 0) w.add_row(i, t, -q);
                if (w.A(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < d; ++j) {
                if (w.A(t, j) == 0) continue;
                Int q = w.A(t, j) / w.A(t, t);
                if (q != 0) w.add_col(j, t, -q);
                if (w.A(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility fix: fold an offending row into row t and redo.
            bool divides = true;
            for (size_t i = t + 1; i < d && divides; ++i)
                for (size_t j = t + 1; j < d && divides; ++j)
                    if (w.A(i, j) % w.A(t, t) != 0) {
                        w.add_row(t, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.A(t, t) < 0) w.negate_row(t);
    }

    SmithResult res{RatMatrix(d), RatMatrix(d), RatMatrix(d)};
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            res.U.at(i, j) = Rat(w.U(i, j));
            res.S.at(i, j) = Rat(w.A(i, j));
            res.V.at(i, j) = Rat(w.V(i, j));
        }
    return res;
}

}  // namespace gm

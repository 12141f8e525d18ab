#include "matrix.hpp"

namespace gm {

RatMatrix::RatMatrix(size_t dim, std::vector<Rat> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) fail_input("matrix entry count does not match dimension");
}

RatMatrix RatMatrix::identity(size_t dim) {
    RatMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const RatVec& diag) {
    RatMatrix m(diag.size());
    for (size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (dim_ != other.dim_) fail_input("matrix dimension mismatch");
    RatMatrix m(dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t k = 0; k < dim_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < dim_; ++j) m.at(i, j) += a * other.at(k, j);
        }
    return m;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
    if (dim_ != v.size()) fail_input("matrix/vector dimension mismatch");
    RatVec r(dim_, Rat(0));
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix m = *this;
    for (auto& e : m.entries_) e *= c;
    return m;
}

Rat RatMatrix::det() const {
    // Fraction-free enough for our sizes: plain elimination on a copy.
    RatMatrix a = *this;
    Rat result = 1;
    for (size_t col = 0; col < dim_; ++col) {
        size_t pivot = col;
        while (pivot < dim_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == dim_) return Rat(0);
        if (pivot != col) {
            for (size_t j = 0; j < dim_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            result = -result;
        }
        result *= a.at(col, col);
        Rat inv = Rat(1) / a.at(col, col);
        for (size_t i = col + 1; i < dim_; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) * inv;
            for (size_t j = col; j < dim_; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return result;
}

RatMatrix RatMatrix::inverse() const {
    RatMatrix a = *this;
    RatMatrix inv = identity(dim_);
    for (size_t col = 0; col < dim_; ++col) {
        size_t pivot = col;
        while (pivot < dim_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == dim_) fail_input("singular matrix has no inverse");
        if (pivot != col)
            for (size_t j = 0; j < dim_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat p = a.at(col, col);
        for (size_t j = 0; j < dim_; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (size_t i = 0; i < dim_; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (size_t j = 0; j < dim_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool RatMatrix::is_integer_matrix() const {
    for (const auto& e : entries_)
        if (!is_integer(e)) return false;
    return true;
}

bool RatMatrix::is_diagonal() const {
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

RatVec RatMatrix::diagonal_entries() const {
    RatVec d(dim_);
    for (size_t i = 0; i < dim_; ++i) d[i] = at(i, i);
    return d;
}

std::string RatMatrix::str() const {
    std::string s = "[";
    for (size_t i = 0; i < dim_; ++i) {
        if (i) s += "; ";
        for (size_t j = 0; j < dim_; ++j) {
            if (j) s += ", ";
            s += rat_str(at(i, j));
        }
    }
    return s + "]";
}

}  // namespace gm

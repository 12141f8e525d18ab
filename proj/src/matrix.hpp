#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace gm {

// Dense square matrix over the rationals. All operations are exact.
class RatMatrix {
  public:
    RatMatrix() : dim_(0) {}
    explicit RatMatrix(size_t dim) : dim_(dim), entries_(dim * dim, Rat(0)) {}
    RatMatrix(size_t dim, std::vector<Rat> entries);

    static RatMatrix identity(size_t dim);
    static RatMatrix diagonal(const RatVec& diag);

    size_t dim() const { return dim_; }

    Rat& at(size_t i, size_t j) { return entries_[i * dim_ + j]; }
    const Rat& at(size_t i, size_t j) const { return entries_[i * dim_ + j]; }

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatVec operator*(const RatVec& v) const;
    RatMatrix scaled(const Rat& c) const;

    Rat det() const;
    bool is_singular() const { return det() == 0; }
    // Gauss-Jordan with exact pivoting; throws on singular input.
    RatMatrix inverse() const;

    bool is_integer_matrix() const;
    bool is_diagonal() const;
    bool is_identity() const;

    RatVec diagonal_entries() const;
    std::string str() const;

  private:
    size_t dim_;
    std::vector<Rat> entries_;
};

// Pair of integer matrices with |det| = 1 used as lattice changes of basis.
struct UnimodularPair {
    RatMatrix P;
    RatMatrix Q;
};

}  // namespace gm

#pragma once

#include <map>
#include <string>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace gm {

// Finite trigonometric polynomial with rational frequencies,
//   f(x) = sum_c coeff_c * e^{2 pi i <c, x>},
// coefficients in a cyclotomic field. This class is closed under the
// pointwise operations used throughout: sums, products, conjugation and
// argument shifts by rational vectors. Distinct frequencies are
// linearly independent over every box, so f vanishes a.e. on a box iff
// every coefficient vanishes: exact zero tests stand in for "a.e."
// statements.
class ExactScalar {
  public:
    ExactScalar() = default;
    explicit ExactScalar(size_t dim) : dim_(dim) {}

    static ExactScalar constant(size_t dim, CycQ value);
    static ExactScalar character(size_t dim, RatVec freq, CycQ coeff = CycQ::one());
    static ExactScalar zero(size_t dim) { return ExactScalar(dim); }

    size_t dim() const { return dim_; }
    const std::map<RatVec, CycQ>& terms() const { return terms_; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar conj() const;
    ExactScalar scaled(const Rat& r) const;
    ExactScalar scaled_cyc(const CycQ& z) const;

    // f(x + v) as a trig polynomial in x
    ExactScalar shifted_arg(const RatVec& v) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycQ constant_value() const;  // requires is_constant()

    bool operator==(const ExactScalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // Exact evaluation at a rational point (a cyclotomic number).
    CycQ eval(const RatVec& x) const;
    std::complex<double> eval_complex(const std::vector<double>& x) const;

    std::string str() const;

  private:
    void insert_term(const RatVec& freq, const CycQ& coeff);

    size_t dim_ = 0;
    std::map<RatVec, CycQ> terms_;  // frequency -> coefficient, no zero coeffs
};

}  // namespace gm

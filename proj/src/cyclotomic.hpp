#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace gm {

// Exact element of the cyclotomic field Q(zeta_N) with 4 | N, stored in
// the group ring basis {zeta^k : 0 <= k < N}. Zero and equality tests
// go through the canonical basis modulo the N-th cyclotomic polynomial,
// so formally different representations of the same number compare
// equal.
class CycQ {
  public:
    CycQ() : n_(4), coeffs_(4, Rat(0)) {}
    static CycQ zero() { return CycQ(); }
    static CycQ one() { return from_rational(Rat(1)); }
    static CycQ from_rational(const Rat& r);
    static CycQ from_complex(const Rat& re, const Rat& im);
    // r * e^{2 pi i turns}
    static CycQ from_polar(const Rat& modulus, const Rat& turns);
    static CycQ root_of_unity(const Rat& turns) { return from_polar(Rat(1), turns); }

    unsigned order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    CycQ operator+(const CycQ& o) const;
    CycQ operator-(const CycQ& o) const;
    CycQ operator*(const CycQ& o) const;
    CycQ operator-() const;
    CycQ conj() const;
    CycQ scaled(const Rat& r) const;

    bool is_zero() const;
    bool operator==(const CycQ& o) const;
    bool operator!=(const CycQ& o) const { return !(*this == o); }

    // |z|^2 = z * conj(z)
    CycQ norm_sq() const { return *this * conj(); }

    // Exact real/imaginary parts when the value lies in Q(i).
    std::optional<std::pair<Rat, Rat>> as_gaussian() const;

    // Canonical coefficients modulo the cyclotomic polynomial, length
    // phi(N), in the smallest field 4 | N' | N containing the value.
    std::pair<unsigned, std::vector<Rat>> canonical() const;

    std::complex<double> to_complex() const;
    std::string str() const;

  private:
    CycQ(unsigned n, std::vector<Rat> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

    CycQ promoted(unsigned m) const;  // reindex into Q(zeta_m), n_ | m
    static unsigned common_order(unsigned a, unsigned b);

    unsigned n_;
    std::vector<Rat> coeffs_;

    friend CycQ cyc_with_order(unsigned n, std::vector<Rat> coeffs);
};

CycQ cyc_with_order(unsigned n, std::vector<Rat> coeffs);

}  // namespace gm

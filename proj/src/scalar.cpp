#include "scalar.hpp"

#include <cmath>

#include "error.hpp"

namespace gm {

ExactScalar ExactScalar::constant(size_t dim, CycQ value) {
    ExactScalar s(dim);
    s.insert_term(zero_vec(dim), value);
    return s;
}

ExactScalar ExactScalar::character(size_t dim, RatVec freq, CycQ coeff) {
    if (freq.size() != dim) fail_input("character frequency dimension mismatch");
    ExactScalar s(dim);
    s.insert_term(freq, coeff);
    return s;
}

void ExactScalar::insert_term(const RatVec& freq, const CycQ& coeff) {
    auto it = terms_.find(freq);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(freq, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (dim_ != o.dim_) fail_input("scalar dimension mismatch");
    ExactScalar s = *this;
    for (const auto& [f, c] : o.terms_) s.insert_term(f, c);
    return s;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    if (dim_ != o.dim_) fail_input("scalar dimension mismatch");
    ExactScalar s = *this;
    for (const auto& [f, c] : o.terms_) s.insert_term(f, -c);
    return s;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (dim_ != o.dim_) fail_input("scalar dimension mismatch");
    ExactScalar s(dim_);
    for (const auto& [f1, c1] : terms_)
        for (const auto& [f2, c2] : o.terms_) s.insert_term(f1 + f2, c1 * c2);
    return s;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar s(dim_);
    for (const auto& [f, c] : terms_) s.terms_.emplace(f, -c);
    return s;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar s(dim_);
    for (const auto& [f, c] : terms_) s.insert_term(-f, c.conj());
    return s;
}

ExactScalar ExactScalar::scaled(const Rat& r) const {
    if (r == 0) return ExactScalar(dim_);
    ExactScalar s(dim_);
    for (const auto& [f, c] : terms_) s.terms_.emplace(f, c.scaled(r));
    return s;
}

ExactScalar ExactScalar::scaled_cyc(const CycQ& z) const {
    ExactScalar s(dim_);
    for (const auto& [f, c] : terms_) s.insert_term(f, c * z);
    return s;
}

ExactScalar ExactScalar::shifted_arg(const RatVec& v) const {
    if (v.size() != dim_) fail_input("shift vector dimension mismatch");
    ExactScalar s(dim_);
    for (const auto& [f, c] : terms_) {
        Rat dot = 0;
        for (size_t i = 0; i < dim_; ++i) dot += f[i] * v[i];
        s.insert_term(f, c * CycQ::root_of_unity(dot));
    }
    return s;
}

bool ExactScalar::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && is_zero_vec(terms_.begin()->first);
}

CycQ ExactScalar::constant_value() const {
    if (terms_.empty()) return CycQ::zero();
    if (!is_constant()) fail_internal("scalar is not constant");
    return terms_.begin()->second;
}

CycQ ExactScalar::eval(const RatVec& x) const {
    CycQ v = CycQ::zero();
    for (const auto& [f, c] : terms_) {
        Rat dot = 0;
        for (size_t i = 0; i < dim_; ++i) dot += f[i] * x[i];
        v = v + c * CycQ::root_of_unity(dot);
    }
    return v;
}

std::complex<double> ExactScalar::eval_complex(const std::vector<double>& x) const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> v(0.0, 0.0);
    for (const auto& [f, c] : terms_) {
        double dot = 0;
        for (size_t i = 0; i < dim_; ++i) dot += f[i].convert_to<double>() * x[i];
        v += c.to_complex() * std::polar(1.0, tau * dot);
    }
    return v;
}

std::string ExactScalar::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [f, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (!is_zero_vec(f)) s += "*e(" + vec_str(f) + ".x)";
    }
    return s;
}

}  // namespace gm

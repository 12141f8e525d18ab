#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace gm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) fail_input("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

inline Rat frac_rat(const Rat& r) { return r - Rat(floor_rat(r)); }

inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Exact square root when the argument is the square of a rational.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

// Canonical "p/q" form; integers print without the denominator.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) fail_input("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail_input("malformed rational literal: " + s);
    }
}

inline std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline RatVec zero_vec(size_t d) { return RatVec(d, Rat(0)); }

}  // namespace gm

#include "cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "error.hpp"

namespace gm {

namespace {

// Integer polynomials as coefficient vectors, lowest degree first.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// exact division, remainder must vanish
Poly poly_div(Poly num, const Poly& den) {
    num = poly_trim(std::move(num));
    if (den.empty()) fail_internal("division by zero polynomial");
    if (num.size() < den.size()) {
        if (!num.empty()) fail_internal("inexact cyclotomic polynomial division");
        return {};
    }
    Poly q(num.size() - den.size() + 1, Rat(0));
    for (size_t shift = q.size(); shift-- > 0;) {
        Rat c = num[shift + den.size() - 1] / den.back();
        q[shift] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num = poly_trim(std::move(num));
    if (!num.empty()) fail_internal("inexact cyclotomic polynomial division");
    return poly_trim(std::move(q));
}

Poly cyclotomic_poly(unsigned n, std::map<unsigned, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    Poly result = num;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) result = poly_div(std::move(result), cyclotomic_poly(d, memo));
    memo[n] = result;
    return result;
}

struct CycTable {
    unsigned phi;
    std::vector<std::vector<Rat>> red;  // red[k] = x^k mod Phi_n, length phi
};

const CycTable& table_for(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, CycTable> tables;
    static std::map<unsigned, Poly> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;

    Poly phi_poly = cyclotomic_poly(n, memo);
    unsigned phi = unsigned(phi_poly.size() - 1);
    CycTable t;
    t.phi = phi;
    t.red.resize(n);
    // x^k mod Phi_n by repeated multiplication by x
    std::vector<Rat> cur(phi, Rat(0));
    cur[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        t.red[k] = cur;
        // multiply by x
        Rat top = cur[phi - 1];
        for (unsigned i = phi; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
    }
    return tables.emplace(n, std::move(t)).first->second;
}

}  // namespace

CycQ cyc_with_order(unsigned n, std::vector<Rat> coeffs) {
    if (n % 4 != 0 || coeffs.size() != n) fail_internal("bad cyclotomic construction");
    return CycQ(n, std::move(coeffs));
}

CycQ CycQ::from_rational(const Rat& r) {
    std::vector<Rat> c(4, Rat(0));
    c[0] = r;
    return CycQ(4, std::move(c));
}

CycQ CycQ::from_complex(const Rat& re, const Rat& im) {
    std::vector<Rat> c(4, Rat(0));
    c[0] = re;
    c[1] = im;  // zeta_4 = i
    return CycQ(4, std::move(c));
}

CycQ CycQ::from_polar(const Rat& modulus, const Rat& turns) {
    Rat t = frac_rat(turns);
    Int den = rat_den(t);
    Int n4 = den;
    // order must be a multiple of 4 and of the denominator
    Int g = gcd(n4, Int(4));
    n4 = n4 / g * 4;
    if (n4 > 1024) fail_input("phase denominator too large for exact arithmetic");
    unsigned n = n4.convert_to<unsigned>();
    std::vector<Rat> c(n, Rat(0));
    Int idx = rat_num(t) * Int(n) / rat_den(t);
    c[idx.convert_to<unsigned>() % n] = modulus;
    return CycQ(n, std::move(c));
}

unsigned CycQ::common_order(unsigned a, unsigned b) {
    return unsigned(std::lcm(a, b));
}

CycQ CycQ::promoted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) fail_internal("invalid cyclotomic promotion");
    std::vector<Rat> c(m, Rat(0));
    unsigned f = m / n_;
    for (unsigned k = 0; k < n_; ++k)
        if (coeffs_[k] != 0) c[k * f] = coeffs_[k];
    return CycQ(m, std::move(c));
}

CycQ CycQ::operator+(const CycQ& o) const {
    unsigned m = common_order(n_, o.n_);
    CycQ a = promoted(m), b = o.promoted(m);
    for (unsigned k = 0; k < m; ++k) a.coeffs_[k] += b.coeffs_[k];
    return a;
}

CycQ CycQ::operator-(const CycQ& o) const {
    unsigned m = common_order(n_, o.n_);
    CycQ a = promoted(m), b = o.promoted(m);
    for (unsigned k = 0; k < m; ++k) a.coeffs_[k] -= b.coeffs_[k];
    return a;
}

CycQ CycQ::operator-() const {
    CycQ a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CycQ CycQ::operator*(const CycQ& o) const {
    unsigned m = common_order(n_, o.n_);
    CycQ a = promoted(m), b = o.promoted(m);
    std::vector<Rat> c(m, Rat(0));
    for (unsigned i = 0; i < m; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycQ(m, std::move(c));
}

CycQ CycQ::conj() const {
    std::vector<Rat> c(n_, Rat(0));
    for (unsigned k = 0; k < n_; ++k)
        if (coeffs_[k] != 0) c[(n_ - k) % n_] = coeffs_[k];
    return CycQ(n_, std::move(c));
}

CycQ CycQ::scaled(const Rat& r) const {
    CycQ a = *this;
    for (auto& c : a.coeffs_) c *= r;
    return a;
}

bool CycQ::is_zero() const {
    const auto& t = table_for(n_);
    std::vector<Rat> canon(t.phi, Rat(0));
    for (unsigned k = 0; k < n_; ++k) {
        if (coeffs_[k] == 0) continue;
        for (unsigned i = 0; i < t.phi; ++i) canon[i] += coeffs_[k] * t.red[k][i];
    }
    for (const auto& c : canon)
        if (c != 0) return false;
    return true;
}

bool CycQ::operator==(const CycQ& o) const { return (*this - o).is_zero(); }

std::pair<unsigned, std::vector<Rat>> CycQ::canonical() const {
    const auto& t = table_for(n_);
    std::vector<Rat> canon(t.phi, Rat(0));
    for (unsigned k = 0; k < n_; ++k) {
        if (coeffs_[k] == 0) continue;
        for (unsigned i = 0; i < t.phi; ++i) canon[i] += coeffs_[k] * t.red[k][i];
    }
    return {n_, std::move(canon)};
}

std::optional<std::pair<Rat, Rat>> CycQ::as_gaussian() const {
    // value in Q(i) iff canonical form is a + b * (zeta^{n/4} mod Phi)
    auto [n, canon] = canonical();
    const auto& t = table_for(n);
    const auto& icanon = t.red[n / 4];
    // solve canon = a*e0 + b*icanon
    Rat a, b;
    bool have_b = false;
    for (unsigned i = 1; i < t.phi; ++i) {
        if (icanon[i] != 0) {
            b = canon[i] / icanon[i];
            have_b = true;
            break;
        }
    }
    if (!have_b) b = 0;
    a = canon[0] - b * icanon[0];
    // verify
    std::vector<Rat> check(t.phi, Rat(0));
    check[0] = a;
    for (unsigned i = 0; i < t.phi; ++i) check[i] += b * icanon[i];
    for (unsigned i = 0; i < t.phi; ++i)
        if (check[i] != canon[i]) return std::nullopt;
    return std::make_pair(a, b);
}

std::complex<double> CycQ::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (unsigned k = 0; k < n_; ++k) {
        if (coeffs_[k] == 0) continue;
        double c = double(coeffs_[k].convert_to<double>());
        z += c * std::polar(1.0, tau * double(k) / double(n_));
    }
    return z;
}

std::string CycQ::str() const {
    if (auto g = as_gaussian()) return rat_str(g->first) + (g->second >= 0 ? "+" : "") + rat_str(g->second) + "i";
    std::string s = "cyc" + std::to_string(n_) + "(";
    bool first = true;
    for (unsigned k = 0; k < n_; ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) s += ", ";
        s += rat_str(coeffs_[k]) + "@" + std::to_string(k);
        first = false;
    }
    return s + ")";
}

}  // namespace gm

#include "mckay/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mckay {

int CycNum::euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used to build Phi_N from
// x^N - 1 = prod_{d | N} Phi_d.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        long long c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long r : num)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::map<int, std::vector<long long>> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

const std::vector<long long>& CycNum::cyclotomic_polynomial(int n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    std::function<std::vector<long long>(int)> build = [&](int m) -> std::vector<long long> {
        auto found = g_phi_cache.find(m);
        if (found != g_phi_cache.end()) return found->second;
        std::vector<long long> poly(m + 1, 0); // x^m - 1
        poly[0] = -1;
        poly[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) poly = poly_div_exact(std::move(poly), build(d));
        g_phi_cache[m] = poly;
        return poly;
    };
    build(n);
    return g_phi_cache.at(n);
}

CycNum CycNum::reduce(int conductor, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(conductor);
    const size_t deg = phi.size() - 1; // = euler_phi(conductor)
    // Remainder of poly modulo the monic polynomial phi.
    for (int i = (int)poly.size() - 1; i >= (int)deg; --i) {
        Rational c = poly[i];
        if (c.is_zero()) continue;
        poly[i] = Rational(0);
        for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    CycNum out;
    out.conductor_ = conductor;
    out.coeffs_.assign(deg, Rational(0));
    for (size_t i = 0; i < deg && i < poly.size(); ++i) out.coeffs_[i] = poly[i];
    return out;
}

CycNum CycNum::root_of_unity(int conductor, long long k) {
    if (conductor < 1) throw std::domain_error("conductor must be positive");
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<Rational> poly(conductor, Rational(0));
    poly[(size_t)k] = Rational(1);
    return reduce(conductor, std::move(poly));
}

CycNum CycNum::from_exponents(int conductor, const std::vector<Rational>& c) {
    if ((int)c.size() != conductor) throw std::domain_error("exponent vector size mismatch");
    return reduce(conductor, c);
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycNum::rational_part_or_throw() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return coeffs_[0];
}

CycNum CycNum::lifted(int conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor % conductor_ != 0) throw std::domain_error("invalid conductor lift");
    const long long step = conductor / conductor_;
    std::vector<Rational> poly(conductor, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        poly[(size_t)((long long)i * step % conductor)] += coeffs_[i];
    return reduce(conductor, std::move(poly));
}

void CycNum::align(const CycNum& a, const CycNum& b, CycNum& la, CycNum& lb) {
    int n = (int)std::lcm((long long)a.conductor_, (long long)b.conductor_);
    la = a.lifted(n);
    lb = b.lifted(n);
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    CycNum la, lb;
    CycNum::align(a, b, la, lb);
    for (size_t i = 0; i < la.coeffs_.size(); ++i) la.coeffs_[i] += lb.coeffs_[i];
    return la;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    CycNum la, lb;
    CycNum::align(a, b, la, lb);
    for (size_t i = 0; i < la.coeffs_.size(); ++i) la.coeffs_[i] -= lb.coeffs_[i];
    return la;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    CycNum la, lb;
    CycNum::align(a, b, la, lb);
    std::vector<Rational> prod(la.coeffs_.size() + lb.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < la.coeffs_.size(); ++i) {
        if (la.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < lb.coeffs_.size(); ++j) {
            if (lb.coeffs_[j].is_zero()) continue;
            prod[i + j] += la.coeffs_[i] * lb.coeffs_[j];
        }
    }
    return CycNum::reduce(la.conductor_, std::move(prod));
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycNum CycNum::galois(long long k) const {
    long long kk = k % conductor_;
    if (kk < 0) kk += conductor_;
    if (std::gcd(kk, (long long)conductor_) != 1)
        throw std::domain_error("galois exponent not coprime to conductor");
    std::vector<Rational> poly(conductor_, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        poly[(size_t)((long long)i * kk % conductor_)] += coeffs_[i];
    return reduce(conductor_, std::move(poly));
}

CycNum CycNum::conj() const {
    if (conductor_ == 1) return *this;
    return galois(conductor_ - 1);
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double tau = 6.283185307179586476925;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        double arg = tau * double(i) / double(conductor_);
        z += coeffs_[i].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

bool operator==(const CycNum& a, const CycNum& b) { return CycNum::compare(a, b) == 0; }

int CycNum::compare(const CycNum& a, const CycNum& b) {
    CycNum la, lb;
    align(a, b, la, lb);
    for (size_t i = 0; i < la.coeffs_.size(); ++i) {
        if (la.coeffs_[i] < lb.coeffs_[i]) return -1;
        if (lb.coeffs_[i] < la.coeffs_[i]) return 1;
    }
    return 0;
}

std::vector<CycNum::Term> CycNum::terms() const {
    std::vector<Term> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            out.push_back(Term{coeffs_[i].num(), coeffs_[i].den(), (int)i});
    return out;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i].str();
        } else {
            if (!(coeffs_[i] == Rational(1))) os << coeffs_[i].str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace mckay

#pragma once

#include <complex>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Element of the cyclotomic field Q(zeta_N), stored on the power basis
// 1, zeta, ..., zeta^{phi(N)-1} after reduction modulo the N-th cyclotomic
// polynomial. The reduced form is unique, so equality is coefficient-wise
// (after lifting both operands to a common conductor).
class CycNum {
public:
    CycNum() : conductor_(1), coeffs_(1) {}
    explicit CycNum(const Rational& r) : conductor_(1), coeffs_{r} {}
    CycNum(long long n) : conductor_(1), coeffs_{Rational(n)} {}

    // zeta_N^k
    static CycNum root_of_unity(int conductor, long long k);
    // value given by exponent coefficients c_e, e = 0..N-1 (sum c_e zeta^e)
    static CycNum from_exponents(int conductor, const std::vector<Rational>& c);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part_or_throw() const; // requires is_rational()

    CycNum conj() const;                 // complex conjugation, zeta -> zeta^{-1}
    CycNum galois(long long k) const;    // zeta -> zeta^k, gcd(k, N) = 1

    std::complex<double> to_complex() const;

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Total order used only for canonical sorting: lexicographic on the
    // reduced coefficient vectors at a common conductor.
    static int compare(const CycNum& a, const CycNum& b);

    // Terms of the reduced form with nonzero coefficient, as (num, den, exp).
    struct Term {
        long long num, den;
        int exp;
    };
    std::vector<Term> terms() const;

    std::string str() const;

    // Monic cyclotomic polynomial Phi_N with integer coefficients,
    // index i = coefficient of x^i.
    static const std::vector<long long>& cyclotomic_polynomial(int n);
    static int euler_phi(int n);

private:
    int conductor_;
    std::vector<Rational> coeffs_; // size euler_phi(conductor_)

    CycNum lifted(int conductor) const; // conductor_ | conductor
    static void align(const CycNum& a, const CycNum& b, CycNum& la, CycNum& lb);
    static CycNum reduce(int conductor, std::vector<Rational> poly);
};

} // namespace mckay

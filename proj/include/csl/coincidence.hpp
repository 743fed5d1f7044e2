#pragma once

// Coincidence rotations and reflections of the unshifted square lattice
// Z[i].  A coincidence rotation acts as multiplication by eps*z/conj(z)
// where z is a primitive Gaussian integer (z and conj(z) coprime) and eps
// is a unit; a coincidence reflection is such a rotation followed by
// complex conjugation.  The coincidence index of either is N(z) and the
// coincidence site lattice is the principal ideal (z).

#include "gaussian.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace csl {

namespace detail {

// z qualifies as the numerator of a coincidence rotation iff its components
// are coprime and of different parity (this forces N(z) odd with all prime
// factors 1 mod 4, or z a unit).
inline bool valid_numerator(const gaussian_int& z) {
    if (z.is_zero()) return false;
    bigint a = boost::multiprecision::abs(z.re);
    bigint b = boost::multiprecision::abs(z.im);
    if (boost::multiprecision::gcd(a, b) > 1) return false;
    return (z.re + z.im) % 2 != 0;
}

}  // namespace detail

class isometry {
public:
    isometry() = default;  // the identity

    // R(z, eps): multiplication by eps*z/conj(z).  Any associate of a valid
    // numerator is accepted; it is canonicalized and eps adjusted so the map
    // is unchanged.
    static isometry rotation(const gaussian_int& numerator, unit eps) {
        return make(numerator, eps, false);
    }

    // R(z, eps) followed by conjugation (reflection along the real axis).
    static isometry reflection(const gaussian_int& numerator, unit eps) {
        return make(numerator, eps, true);
    }

    static isometry conjugation() { return reflection(gaussian_int(1), unit_one); }

    const gaussian_int& numerator() const { return z_; }
    unit eps() const { return eps_; }
    bool reflected() const { return reflected_; }
    bool is_identity() const { return !reflected_ && z_ == gaussian_int(1) && eps_ == unit_one; }
    bool in_point_group() const { return z_ == gaussian_int(1); }

    // Coincidence index Sigma = N(z); the same for R and R*T_r.
    bigint sigma() const { return z_.norm(); }

    // Exact image of a point of Q(i).
    gaussian_rational apply(const gaussian_rational& w) const {
        gaussian_rational v = reflected_ ? w.conj() : w;
        return gaussian_rational(z_ * eps_.value(), z_.conj()) * v;
    }

    // Composition (a*b)(w) = a(b(w)).  The combined numerator is reduced by
    // cancelling gcd(w, conj(w)), which for a product of two primitive
    // numerators is a positive rational integer; the cancelled factor leaves
    // the map unchanged.
    friend isometry operator*(const isometry& a, const isometry& b) {
        gaussian_int zb = a.reflected_ ? b.z_.conj() : b.z_;
        unit eb = a.reflected_ ? b.eps_.conj() : b.eps_;
        gaussian_int w = a.z_ * zb;
        gaussian_int g = gcd(w, w.conj());
        gaussian_int zr = exact_div(w, g);
        auto [zc, u] = canonical_associate(zr);
        isometry out;
        out.z_ = zc;
        out.eps_ = a.eps_ * eb * u.squared();
        out.reflected_ = a.reflected_ != b.reflected_;
        return out;
    }

    isometry inverse() const {
        if (reflected_) return *this;  // reflections are involutions
        auto [zc, u] = canonical_associate(z_.conj());
        isometry out;
        out.z_ = zc;
        out.eps_ = eps_.conj() * u.squared();
        out.reflected_ = false;
        return out;
    }

    friend bool operator==(const isometry& a, const isometry& b) = default;

    // Sort key (sigma, z.re, z.im, unit power, reflected) for stable listings.
    friend bool operator<(const isometry& a, const isometry& b) {
        bigint sa = a.sigma(), sb = b.sigma();
        int pa = a.eps_.power(), pb = b.eps_.power();
        return std::tie(sa, a.z_.re, a.z_.im, pa, a.reflected_) <
               std::tie(sb, b.z_.re, b.z_.im, pb, b.reflected_);
    }

private:
    static isometry make(const gaussian_int& numerator, unit eps, bool reflected) {
        if (numerator.is_zero()) throw std::invalid_argument("isometry: zero numerator");
        auto [zc, u] = canonical_associate(numerator);
        if (zc.is_unit()) zc = gaussian_int(1);
        if (!detail::valid_numerator(zc))
            throw std::invalid_argument("isometry: numerator " + to_string(numerator) +
                                        " is not primitive (components must be coprime and of different parity)");
        isometry out;
        out.z_ = zc;
        out.eps_ = eps * u.squared();
        out.reflected_ = reflected;
        return out;
    }

    gaussian_int z_{1};
    unit eps_;
    bool reflected_ = false;
};

inline std::string to_string(const isometry& s) {
    std::string out = "R(" + to_string(s.numerator()) + "," + to_string(s.eps()) + ")";
    if (s.reflected()) out += "Tr";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const isometry& s) { return os << to_string(s); }

// The CSL of the unshifted lattice: the principal ideal (z), of index N(z).
struct ideal_csl {
    gaussian_int generator;  // canonical associate

    bigint index() const { return generator.norm(); }
    std::pair<gaussian_int, gaussian_int> basis() const { return {generator, generator.mul_i()}; }
    bool contains(const gaussian_int& w) const { return divides(generator, w); }

    friend bool operator==(const ideal_csl&, const ideal_csl&) = default;
};

// Gamma(R) = (z); independent of the unit and of the reflection flag.
inline ideal_csl csl_of(const isometry& s) { return {s.numerator()}; }

// The 8 symmetries of the square lattice: four rotations and four reflections.
inline std::array<isometry, 8> point_group() {
    std::array<isometry, 8> out;
    for (int k = 0; k < 4; ++k) {
        out[k] = isometry::rotation(gaussian_int(1), unit::i_power(k));
        out[4 + k] = isometry::reflection(gaussian_int(1), unit::i_power(k));
    }
    return out;
}

// All canonical primitive numerators of norm m.  Empty unless every prime
// factor of m is 1 (mod 4); there are 2^k of them for k distinct primes,
// obtained by choosing a conjugate branch per prime.
inline std::vector<gaussian_int> enumerate_numerators(const bigint& m) {
    if (m < 1) throw std::domain_error("enumerate_numerators: norm must be positive");
    if (m == 1) return {gaussian_int(1)};
    std::vector<gaussian_int> acc{gaussian_int(1)};
    for (const auto& [p, e] : factor_integer(m)) {
        if (p % 4 != 1) return {};
        gaussian_int omega = split_prime(p);
        gaussian_int up = pow(omega, static_cast<unsigned>(e));
        gaussian_int down = pow(omega.conj(), static_cast<unsigned>(e));
        std::vector<gaussian_int> next;
        next.reserve(acc.size() * 2);
        for (const gaussian_int& z : acc) {
            next.push_back(z * up);
            next.push_back(z * down);
        }
        acc = std::move(next);
    }
    for (gaussian_int& z : acc) z = canonical_associate(z).first;
    std::sort(acc.begin(), acc.end(), [](const gaussian_int& a, const gaussian_int& b) {
        return lex_less{}(a, b);
    });
    return acc;
}

// Number of CSLs of index m: multiplicative, 2 at every power of a split
// prime, 0 as soon as m has a prime factor 2 or 3 (mod 4).
inline bigint count_csls(const bigint& m) {
    if (m < 1) throw std::domain_error("count_csls: index must be positive");
    bigint out = 1;
    for (const auto& [p, e] : factor_integer(m)) {
        if (p % 4 != 1) return 0;
        out *= 2;
        (void)e;
    }
    return out;
}

// Number of coincidence rotations of index m: four per CSL.
inline bigint count_rotations(const bigint& m) { return 4 * count_csls(m); }

// Builds the coincidence isometry with unit eps and numerator
// prod omega_p^{n_p} (conjugate branch for negative exponents).
inline isometry isometry_from_exponents(const std::map<bigint, int>& exponents, unit eps,
                                        bool reflected = false) {
    gaussian_int z{1};
    for (const auto& [p, n] : exponents) {
        if (n == 0) continue;
        gaussian_int omega = split_prime(p);  // validates p
        if (n > 0)
            z = z * pow(omega, static_cast<unsigned>(n));
        else
            z = z * pow(omega.conj(), static_cast<unsigned>(-n));
    }
    return reflected ? isometry::reflection(z, eps) : isometry::rotation(z, eps);
}

}  // namespace csl

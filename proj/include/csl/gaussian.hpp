#pragma once

// Exact arithmetic in Z[i], the ring of Gaussian integers, and in its field
// of fractions Q(i).  Everything is arbitrary precision and everything is
// exact; there is no floating point anywhere in this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace csl {

using bigint = boost::multiprecision::cpp_int;

// Floor division p/n for n > 0.
inline bigint floor_div(const bigint& p, const bigint& n) {
    bigint q = p / n;
    if (p % n != 0 && (p < 0) != (n < 0)) --q;
    return q;
}

// Nearest integer to p/n for n > 0; a tie (fractional part exactly 1/2)
// resolves to the even candidate.
inline bigint round_div(const bigint& p, const bigint& n) {
    bigint m = floor_div(p, n);
    bigint r = p - m * n;  // 0 <= r < n
    bigint twice_r = r * 2;
    if (twice_r < n) return m;
    if (twice_r > n) return m + 1;
    return (m % 2 == 0) ? m : bigint(m + 1);
}

struct gaussian_int {
    bigint re{0};
    bigint im{0};

    gaussian_int() = default;
    gaussian_int(bigint r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    gaussian_int(bigint r, bigint i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    gaussian_int conj() const { return {re, -im}; }
    bigint norm() const { return re * re + im * im; }
    gaussian_int mul_i() const { return {-im, re}; }

    friend gaussian_int operator+(const gaussian_int& a, const gaussian_int& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend gaussian_int operator-(const gaussian_int& a, const gaussian_int& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend gaussian_int operator-(const gaussian_int& a) { return {-a.re, -a.im}; }
    friend gaussian_int operator*(const gaussian_int& a, const gaussian_int& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const gaussian_int& a, const gaussian_int& b) = default;
};

// Deterministic ordering for containers and sorted output: (re, im).
struct lex_less {
    bool operator()(const gaussian_int& a, const gaussian_int& b) const {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

// One of the four units {1, i, -1, -i}, stored as the exponent of i.
class unit {
public:
    constexpr unit() = default;
    static constexpr unit i_power(int k) { return unit(((k % 4) + 4) % 4); }

    constexpr int power() const { return k_; }
    constexpr unit inverse() const { return i_power(4 - k_); }
    constexpr unit conj() const { return inverse(); }
    constexpr unit squared() const { return i_power(2 * k_); }

    gaussian_int value() const {
        switch (k_) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    friend constexpr unit operator*(unit a, unit b) { return i_power(a.k_ + b.k_); }
    friend constexpr bool operator==(unit a, unit b) = default;

private:
    explicit constexpr unit(int k) : k_(k) {}
    int k_ = 0;
};

inline constexpr unit unit_one = unit::i_power(0);
inline constexpr unit unit_i = unit::i_power(1);
inline constexpr unit unit_minus_one = unit::i_power(2);
inline constexpr unit unit_minus_i = unit::i_power(3);
inline constexpr unit all_units[4] = {unit_one, unit_i, unit_minus_one, unit_minus_i};

inline gaussian_int operator*(const gaussian_int& z, unit u) {
    switch (u.power()) {
        case 0: return z;
        case 1: return z.mul_i();
        case 2: return -z;
        default: return {z.im, -z.re};
    }
}

// The unit u with value w, for |w| = 1.
inline unit unit_from(const gaussian_int& w) {
    for (unit u : all_units)
        if (u.value() == w) return u;
    throw std::domain_error("unit_from: not a unit of Z[i]");
}

// Representative of the associate orbit {z, iz, -z, -iz} lying in the
// quadrant re > 0, im >= 0.  Returns (w, u) with w = u*z.
inline std::pair<gaussian_int, unit> canonical_associate(const gaussian_int& z) {
    if (z.is_zero()) throw std::domain_error("canonical_associate: zero has no associate representative");
    for (unit u : all_units) {
        gaussian_int w = z * u;
        if (w.re > 0 && w.im >= 0) return {w, u};
    }
    throw std::logic_error("canonical_associate: unreachable");
}

// Euclidean division: a = b*q + r with N(r) <= N(b)/2 < N(b).  The quotient
// is the componentwise nearest Gaussian integer to a/b (ties toward even).
inline std::pair<gaussian_int, gaussian_int> divmod(const gaussian_int& a, const gaussian_int& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    gaussian_int w = a * b.conj();
    bigint n = b.norm();
    gaussian_int q{round_div(w.re, n), round_div(w.im, n)};
    gaussian_int r = a - b * q;
    return {q, r};
}

// True iff d divides z in Z[i].
inline bool divides(const gaussian_int& d, const gaussian_int& z) {
    if (d.is_zero()) throw std::domain_error("divides: zero divisor");
    gaussian_int w = z * d.conj();
    bigint n = d.norm();
    return w.re % n == 0 && w.im % n == 0;
}

inline gaussian_int exact_div(const gaussian_int& z, const gaussian_int& d) {
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
    gaussian_int w = z * d.conj();
    bigint n = d.norm();
    if (w.re % n != 0 || w.im % n != 0) throw std::domain_error("exact_div: not divisible");
    return {w.re / n, w.im / n};
}

// Greatest common divisor, returned as a canonical associate.
inline gaussian_int gcd(gaussian_int a, gaussian_int b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        gaussian_int r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return canonical_associate(a).first;
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g = gcd(a, b), g canonical.
inline std::tuple<gaussian_int, gaussian_int, gaussian_int> extended_gcd(const gaussian_int& a,
                                                                         const gaussian_int& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("extended_gcd(0, 0) is undefined");
    if (!a.is_zero() && (b.is_zero() || divides(a, b))) {
        auto [g, u] = canonical_associate(a);
        return {g, u.value(), gaussian_int(0)};
    }
    if (!b.is_zero() && (a.is_zero() || divides(b, a))) {
        auto [g, u] = canonical_associate(b);
        return {g, gaussian_int(0), u.value()};
    }
    gaussian_int r0 = a, r1 = b;
    gaussian_int s0{1}, s1{0};
    gaussian_int t0{0}, t1{1};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        gaussian_int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        gaussian_int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    auto [g, u] = canonical_associate(r0);
    gaussian_int uv = u.value();
    return {g, s0 * uv, t0 * uv};
}

// --- rational integer helpers -------------------------------------------

inline bool is_prime(const bigint& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (bigint d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Prime factorization of n >= 1 over Z, sorted by prime.
inline std::vector<std::pair<bigint, int>> factor_integer(bigint n) {
    if (n < 1) throw std::domain_error("factor_integer: argument must be positive");
    std::vector<std::pair<bigint, int>> out;
    auto strip = [&](const bigint& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    for (bigint d = 3; d * d <= n; d += 2) strip(d);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// The Gaussian prime above a rational prime p = 1 (mod 4): the canonical
// a + bi with a^2 + b^2 = p and a > b > 0, found by searching
// a in [ceil(sqrt(p/2)), floor(sqrt(p))].
inline gaussian_int split_prime(const bigint& p) {
    if (!is_prime(p)) throw std::domain_error("split_prime: argument is not prime");
    if (p % 4 != 1) throw std::domain_error("split_prime: prime does not split (not 1 mod 4)");
    bigint a = boost::multiprecision::sqrt(bigint(p / 2));
    while (a * a * 2 < p) ++a;
    bigint top = boost::multiprecision::sqrt(p);
    for (; a <= top; ++a) {
        bigint b2 = p - a * a;
        bigint b = boost::multiprecision::sqrt(b2);
        if (b * b == b2) return {a, b};
    }
    throw std::logic_error("split_prime: no representation found");
}

struct prime_power {
    gaussian_int prime;  // canonical associate
    int exponent = 1;

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

struct factorization {
    unit u;
    std::vector<prime_power> factors;  // sorted by (norm, re, im)

    gaussian_int value() const {
        gaussian_int acc = u.value();
        for (const auto& [p, e] : factors)
            for (int k = 0; k < e; ++k) acc = acc * p;
        return acc;
    }
};

// Complete factorization of z != 0 into canonical Gaussian primes, obtained
// by factoring N(z) over Z and lifting each rational prime.
inline factorization factor(const gaussian_int& z) {
    if (z.is_zero()) throw std::domain_error("factor: zero cannot be factored");
    factorization out;
    gaussian_int w = z;
    for (const auto& [p, e] : factor_integer(z.norm())) {
        std::vector<gaussian_int> candidates;
        if (p == 2) {
            candidates.push_back({1, 1});
        } else if (p % 4 == 3) {
            candidates.push_back({p, 0});
        } else {
            gaussian_int omega = split_prime(p);
            candidates.push_back(omega);
            candidates.push_back(canonical_associate(omega.conj()).first);
        }
        for (const gaussian_int& q : candidates) {
            int k = 0;
            while (divides(q, w)) {
                w = exact_div(w, q);
                ++k;
            }
            if (k > 0) out.factors.push_back({q, k});
        }
        (void)e;
    }
    out.u = unit_from(w);
    std::sort(out.factors.begin(), out.factors.end(), [](const prime_power& a, const prime_power& b) {
        bigint na = a.prime.norm(), nb = b.prime.norm();
        return std::tie(na, a.prime.re, a.prime.im) < std::tie(nb, b.prime.re, b.prime.im);
    });
    return out;
}

inline gaussian_int pow(gaussian_int z, unsigned e) {
    gaussian_int acc{1};
    while (e > 0) {
        if (e & 1u) acc = acc * z;
        z = z * z;
        e >>= 1u;
    }
    return acc;
}

// --- Gaussian rationals ---------------------------------------------------

// A reduced quotient of Gaussian integers.  gcd(num, den) is a unit and den
// is the canonical associate of the denominator (or exactly 1).
class gaussian_rational {
public:
    gaussian_rational() : num_(0), den_(1) {}
    gaussian_rational(gaussian_int n) : num_(std::move(n)), den_(1) {}  // NOLINT
    gaussian_rational(gaussian_int n, gaussian_int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const gaussian_int& num() const { return num_; }
    const gaussian_int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == gaussian_int(1); }

    gaussian_rational conj() const { return {num_.conj(), den_.conj()}; }

    // x written over the positive integer denominator N(den):
    // x = (re_num + im_num i) / den with den > 0.
    struct component_form {
        bigint re_num;
        bigint im_num;
        bigint den;
    };
    component_form components() const {
        gaussian_int w = num_ * den_.conj();
        return {w.re, w.im, den_.norm()};
    }

    // The representative of x modulo Z[i] with both components in [0, 1).
    gaussian_rational frac() const {
        component_form c = components();
        gaussian_int whole{floor_div(c.re_num, c.den), floor_div(c.im_num, c.den)};
        return *this - gaussian_rational(whole);
    }

    friend gaussian_rational operator+(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend gaussian_rational operator-(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend gaussian_rational operator-(const gaussian_rational& a) { return {-a.num_, a.den_}; }
    friend gaussian_rational operator*(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend gaussian_rational operator/(const gaussian_rational& a, const gaussian_rational& b) {
        if (b.is_zero()) throw std::domain_error("gaussian_rational: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const gaussian_rational& a, const gaussian_rational& b) = default;

    // Lexicographic order by exact value (re, then im); for deterministic output.
    friend bool lex_before(const gaussian_rational& a, const gaussian_rational& b) {
        component_form ca = a.components(), cb = b.components();
        bigint lhs = ca.re_num * cb.den, rhs = cb.re_num * ca.den;
        if (lhs != rhs) return lhs < rhs;
        lhs = ca.im_num * cb.den;
        rhs = cb.im_num * ca.den;
        return lhs < rhs;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("gaussian_rational: zero denominator");
        if (num_.is_zero()) {
            den_ = gaussian_int(1);
            return;
        }
        gaussian_int g = gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
        auto [dc, u] = canonical_associate(den_);
        den_ = dc;
        num_ = num_ * u;
        if (den_.is_unit()) {
            // canonical unit denominator is exactly 1
            num_ = num_ * unit_from(den_).inverse();
            den_ = gaussian_int(1);
        }
    }

    gaussian_int num_;
    gaussian_int den_;
};

// --- formatting -----------------------------------------------------------

inline std::string to_string(const bigint& n) { return n.str(); }

inline std::string to_string(const gaussian_int& z) {
    if (z.im == 0) return z.re.str();
    std::string imag;
    if (z.im == 1)
        imag = "i";
    else if (z.im == -1)
        imag = "-i";
    else
        imag = z.im.str() + "i";
    if (z.re == 0) return imag;
    std::string out = z.re.str();
    if (z.im > 0) out += "+";
    return out + imag;
}

inline std::string to_string(unit u) { return to_string(u.value()); }

inline std::string to_string(const gaussian_rational& x) {
    auto part = [](const bigint& num, const bigint& den, bool imag_mark) {
        bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
        bigint n = num / g, d = den / g;
        std::string s;
        if (imag_mark && d == 1 && n == 1)
            s = "";
        else if (imag_mark && d == 1 && n == -1)
            s = "-";
        else
            s = n.str();
        if (d != 1) s += "/" + d.str();
        if (imag_mark) s += "i";
        return s;
    };
    gaussian_rational::component_form c = x.components();
    if (c.im_num == 0) return part(c.re_num, c.den, false);
    std::string imag = part(c.im_num, c.den, true);
    if (c.re_num == 0) return imag;
    std::string out = part(c.re_num, c.den, false);
    if (c.im_num > 0) out += "+";
    return out + imag;
}

inline std::ostream& operator<<(std::ostream& os, const gaussian_int& z) { return os << to_string(z); }
inline std::ostream& operator<<(std::ostream& os, const gaussian_rational& x) { return os << to_string(x); }

}  // namespace csl

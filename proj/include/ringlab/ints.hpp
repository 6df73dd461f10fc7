// Arbitrary-precision integer helpers.
#ifndef RINGLAB_INTS_HPP
#define RINGLAB_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ringlab {

using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(Int a, Int b) {
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// g = gcd(a, b) with g = s*a + t*b.  g >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int old_r = a, r = b;
    Int old_s = 1, s1 = 0;
    Int old_t = 0, t1 = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s1; old_s = s1; s1 = tmp;
        tmp = old_t - q * t1; old_t = t1; t1 = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    s = old_s;
    t = old_t;
    return old_r;
}

// Least nonnegative residue of a mod m (m > 0).
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a mod m; throws if not invertible.
inline Int inv_mod(const Int& a, const Int& m) {
    Int s, t;
    Int g = ext_gcd(mod_pos(a, m), m, s, t);
    if (g != 1) throw std::domain_error("inv_mod: element not invertible");
    return mod_pos(s, m);
}

inline std::size_t bit_length(const Int& a) {
    if (a == 0) return 0;
    return boost::multiprecision::msb(int_abs(a)) + 1;
}

}  // namespace ringlab

#endif

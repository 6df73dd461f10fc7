// Explicit finite commutative rings: Z/n, GF(p^k) and finite products.
//
// Elements are canonical indices in [0, cardinality).  For Z/n the index is
// the residue, for GF(p,k) the base-p encoding of the coefficient vector
// (index = sum c_i p^i), for products the mixed-radix encoding with the first
// factor most significant.  Rings of cardinality <= 256 get Cayley tables and
// an exhaustive verification of the commutative-unital-ring axioms at
// construction time.
#ifndef RINGLAB_FINRING_HPP
#define RINGLAB_FINRING_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

namespace gfdetail {

// dense coefficient vectors over Z/p, lowest degree first, no trailing zeros
inline void gf_trim(std::vector<long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<long> gf_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    gf_trim(r);
    return r;
}

// remainder of a modulo monic m
inline std::vector<long> gf_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    gf_trim(a);
    while (a.size() >= m.size()) {
        long c = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            long& t = a[shift + i];
            t = ((t - c * m[i]) % p + p) % p;
        }
        gf_trim(a);
    }
    return a;
}

inline bool gf_is_zero(const std::vector<long>& a) { return a.empty(); }

// index <-> coefficient vector of fixed length k
inline std::vector<long> gf_decode(long idx, long p, long k) {
    std::vector<long> c(k, 0);
    for (long i = 0; i < k; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

inline long gf_encode(const std::vector<long>& c, long p, long k) {
    long idx = 0;
    for (long i = k - 1; i >= 0; --i)
        idx = idx * p + (i < static_cast<long>(c.size()) ? c[i] : 0);
    return idx;
}

// monic m of degree k irreducible over Z/p: no monic divisor of degree 1..k/2
inline bool gf_irreducible(const std::vector<long>& m, long p) {
    long k = static_cast<long>(m.size()) - 1;
    if (k < 1) return false;
    for (long d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<long> div = gf_decode(idx, p, d);
            div.resize(d + 1, 0);
            div[d] = 1;  // monic
            if (gf_is_zero(gf_mod(m, div, p))) return false;
        }
    }
    return true;
}

inline std::vector<long> gf_default_modulus(long p, long k) {
    long count = 1;
    for (long i = 0; i < k; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<long> m = gf_decode(idx, p, k);
        m.resize(k + 1, 0);
        m[k] = 1;
        if (gf_irreducible(m, p)) return m;
    }
    throw error("gf_default_modulus: no irreducible found");  // unreachable for prime p
}

inline std::string gf_elem_name(long idx, long p, long k) {
    std::vector<long> c = gf_decode(idx, p, k);
    std::string s;
    for (long i = k - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (c[i] != 1 || i == 0) s += std::to_string(c[i]);
        if (i >= 1) {
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string gf_poly_name(const std::vector<long>& m) {
    std::string s;
    for (long i = static_cast<long>(m.size()) - 1; i >= 0; --i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (m[i] != 1 || i == 0) s += std::to_string(m[i]);
        if (i >= 1) {
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace gfdetail

class FiniteRing {
  public:
    enum class Kind { Zmod, GF, Product };

    static constexpr long kTableLimit = 256;

    FiniteRing() = default;

    static FiniteRing zmod(long n) {
        if (n <= 0) throw invalid_argument_error("Z/n requires n >= 1");
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::Zmod;
        impl->n = n;
        impl->card = n;
        impl->display = "Z/" + std::to_string(n);
        FiniteRing r;
        r.impl_ = impl;
        r.finish(impl);
        return r;
    }

    // modulus: coefficients c0..ck over Z/p, monic; empty = search a default.
    static FiniteRing gf(long p, long k, std::vector<long> modulus = {},
                         std::string display = "") {
        if (p < 2 || !is_prime(p)) throw invalid_argument_error("GF: p must be prime");
        if (k < 1) throw invalid_argument_error("GF: k must be >= 1");
        if (k == 1) {  // GF(p) is Z/p
            FiniteRing r = zmod(p);
            auto impl = std::make_shared<Impl>(*r.impl_);
            impl->display = display.empty() ? "GF(" + std::to_string(p) + ")" : display;
            r.impl_ = impl;
            return r;
        }
        if (modulus.empty()) {
            modulus = gfdetail::gf_default_modulus(p, k);
        } else {
            for (long& c : modulus) c = ((c % p) + p) % p;
            gfdetail::gf_trim(modulus);
            if (static_cast<long>(modulus.size()) != k + 1 || modulus.back() != 1)
                throw invalid_argument_error("GF: modulus must be monic of degree k");
            if (!gfdetail::gf_irreducible(modulus, p))
                throw invalid_argument_error("GF: modulus is reducible over Z/" + std::to_string(p));
        }
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::GF;
        impl->p = p;
        impl->k = k;
        impl->gf_modulus = modulus;
        impl->card = 1;
        for (long i = 0; i < k; ++i) impl->card *= p;
        long q = impl->card;
        impl->display = display.empty() ? "GF(" + std::to_string(q) + "): " +
                                              gfdetail::gf_poly_name(modulus)
                                        : display;
        FiniteRing r;
        r.impl_ = impl;
        r.finish(impl);
        return r;
    }

    static FiniteRing product(std::vector<FiniteRing> factors, std::string display = "") {
        if (factors.empty()) throw invalid_argument_error("product: needs at least one factor");
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::Product;
        impl->factors = std::move(factors);
        impl->card = 1;
        for (auto& f : impl->factors) impl->card *= f.cardinality();
        if (display.empty()) {
            for (auto& f : impl->factors) {
                if (!display.empty()) display += " x ";
                display += f.name();
            }
        }
        impl->display = display;
        FiniteRing r;
        r.impl_ = impl;
        r.finish(impl);
        return r;
    }

    bool valid() const { return impl_ != nullptr; }
    Kind kind() const { return impl_->kind; }
    long cardinality() const { return impl_->card; }
    long characteristic() const { return impl_->charac; }
    const std::string& name() const { return impl_->display; }
    const std::vector<FiniteRing>& factors() const { return impl_->factors; }
    long zmod_n() const { return impl_->n; }

    int zero() const { return 0; }
    int one() const { return impl_->one_idx; }
    bool is_trivial() const { return impl_->card == 1; }

    int add(int a, int b) const {
        return impl_->add_tab.empty() ? add_impl(*impl_, a, b)
                                      : impl_->add_tab[a * impl_->card + b];
    }
    int mul(int a, int b) const {
        return impl_->mul_tab.empty() ? mul_impl(*impl_, a, b)
                                      : impl_->mul_tab[a * impl_->card + b];
    }
    int neg(int a) const {
        return impl_->neg_tab.empty() ? neg_impl(*impl_, a) : impl_->neg_tab[a];
    }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int pow(int a, unsigned e) const {
        int r = one();
        while (e > 0) {
            if (e & 1u) r = mul(r, a);
            a = (e >>= 1) ? mul(a, a) : a;
        }
        return r;
    }

    int from_int(const Int& v) const {
        Int r = mod_pos(v, Int(impl_->charac));
        return impl_->from_int_tab[static_cast<std::size_t>(static_cast<long>(r))];
    }

    std::string elem_name(int a) const { return elem_name_impl(*impl_, a); }

    // Structural identity of ring specifications.
    bool same_as(const FiniteRing& o) const {
        if (impl_ == o.impl_) return true;
        if (impl_->kind != o.impl_->kind) return false;
        switch (impl_->kind) {
            case Kind::Zmod: return impl_->n == o.impl_->n;
            case Kind::GF:
                return impl_->p == o.impl_->p && impl_->k == o.impl_->k &&
                       impl_->gf_modulus == o.impl_->gf_modulus;
            case Kind::Product: {
                if (impl_->factors.size() != o.impl_->factors.size()) return false;
                for (std::size_t i = 0; i < impl_->factors.size(); ++i)
                    if (!impl_->factors[i].same_as(o.impl_->factors[i])) return false;
                return true;
            }
        }
        return false;
    }

    // product element <-> component indices
    std::vector<int> split(int a) const {
        const auto& fs = impl_->factors;
        std::vector<int> out(fs.size());
        for (std::size_t i = fs.size(); i-- > 0;) {
            out[i] = static_cast<int>(a % fs[i].cardinality());
            a = static_cast<int>(a / fs[i].cardinality());
        }
        return out;
    }
    int join(const std::vector<int>& comps) const {
        const auto& fs = impl_->factors;
        long idx = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) idx = idx * fs[i].cardinality() + comps[i];
        return static_cast<int>(idx);
    }

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

  private:
    struct Impl {
        Kind kind = Kind::Zmod;
        long n = 1;
        long p = 0, k = 0;
        std::vector<long> gf_modulus;  // c0..ck, monic
        std::vector<FiniteRing> factors;
        long card = 1;
        long charac = 1;
        int one_idx = 0;
        std::string display;
        std::vector<int> add_tab, mul_tab, neg_tab;  // card <= kTableLimit
        std::vector<int> from_int_tab;               // size charac
    };

    static int add_impl(const Impl& im, int a, int b) {
        switch (im.kind) {
            case Kind::Zmod: return static_cast<int>((static_cast<long>(a) + b) % im.n);
            case Kind::GF: {
                long r = 0, pw = 1;
                long x = a, y = b;
                for (long i = 0; i < im.k; ++i) {
                    r += ((x % im.p + y % im.p) % im.p) * pw;
                    x /= im.p;
                    y /= im.p;
                    pw *= im.p;
                }
                return static_cast<int>(r);
            }
            case Kind::Product: {
                long idx = 0;
                long xa = a, xb = b;
                // recompute mixed radix componentwise (first factor most significant)
                std::vector<int> ca(im.factors.size()), cb(im.factors.size());
                for (std::size_t i = im.factors.size(); i-- > 0;) {
                    long c = im.factors[i].cardinality();
                    ca[i] = static_cast<int>(xa % c);
                    cb[i] = static_cast<int>(xb % c);
                    xa /= c;
                    xb /= c;
                }
                for (std::size_t i = 0; i < im.factors.size(); ++i)
                    idx = idx * im.factors[i].cardinality() + im.factors[i].add(ca[i], cb[i]);
                return static_cast<int>(idx);
            }
        }
        return 0;
    }

    static int mul_impl(const Impl& im, int a, int b) {
        switch (im.kind) {
            case Kind::Zmod: return static_cast<int>((static_cast<long>(a) * b) % im.n);
            case Kind::GF: {
                auto va = gfdetail::gf_decode(a, im.p, im.k);
                auto vb = gfdetail::gf_decode(b, im.p, im.k);
                gfdetail::gf_trim(va);
                gfdetail::gf_trim(vb);
                auto r = gfdetail::gf_mod(gfdetail::gf_mul(va, vb, im.p), im.gf_modulus, im.p);
                return static_cast<int>(gfdetail::gf_encode(r, im.p, im.k));
            }
            case Kind::Product: {
                long idx = 0;
                long xa = a, xb = b;
                std::vector<int> ca(im.factors.size()), cb(im.factors.size());
                for (std::size_t i = im.factors.size(); i-- > 0;) {
                    long c = im.factors[i].cardinality();
                    ca[i] = static_cast<int>(xa % c);
                    cb[i] = static_cast<int>(xb % c);
                    xa /= c;
                    xb /= c;
                }
                for (std::size_t i = 0; i < im.factors.size(); ++i)
                    idx = idx * im.factors[i].cardinality() + im.factors[i].mul(ca[i], cb[i]);
                return static_cast<int>(idx);
            }
        }
        return 0;
    }

    static int neg_impl(const Impl& im, int a) {
        switch (im.kind) {
            case Kind::Zmod: return static_cast<int>((im.n - a) % im.n);
            case Kind::GF: {
                long r = 0, pw = 1, x = a;
                for (long i = 0; i < im.k; ++i) {
                    r += ((im.p - x % im.p) % im.p) * pw;
                    x /= im.p;
                    pw *= im.p;
                }
                return static_cast<int>(r);
            }
            case Kind::Product: {
                long idx = 0, xa = a;
                std::vector<int> ca(im.factors.size());
                for (std::size_t i = im.factors.size(); i-- > 0;) {
                    long c = im.factors[i].cardinality();
                    ca[i] = static_cast<int>(xa % c);
                    xa /= c;
                }
                for (std::size_t i = 0; i < im.factors.size(); ++i)
                    idx = idx * im.factors[i].cardinality() + im.factors[i].neg(ca[i]);
                return static_cast<int>(idx);
            }
        }
        return 0;
    }

    static std::string elem_name_impl(const Impl& im, int a) {
        switch (im.kind) {
            case Kind::Zmod: return std::to_string(a);
            case Kind::GF: return gfdetail::gf_elem_name(a, im.p, im.k);
            case Kind::Product: {
                std::string s = "(";
                long xa = a;
                std::vector<int> ca(im.factors.size());
                for (std::size_t i = im.factors.size(); i-- > 0;) {
                    long c = im.factors[i].cardinality();
                    ca[i] = static_cast<int>(xa % c);
                    xa /= c;
                }
                for (std::size_t i = 0; i < im.factors.size(); ++i) {
                    if (i) s += ",";
                    s += im.factors[i].elem_name(ca[i]);
                }
                return s + ")";
            }
        }
        return "?";
    }

    void finish(std::shared_ptr<Impl>& impl) {
        Impl& im = *impl;
        // one
        switch (im.kind) {
            case Kind::Zmod: im.one_idx = im.n == 1 ? 0 : 1; break;
            case Kind::GF: im.one_idx = 1; break;
            case Kind::Product: {
                long idx = 0;
                for (auto& f : im.factors) idx = idx * f.cardinality() + f.one();
                im.one_idx = static_cast<int>(idx);
                break;
            }
        }
        // tables
        if (im.card <= kTableLimit) {
            long n = im.card;
            im.add_tab.resize(n * n);
            im.mul_tab.resize(n * n);
            im.neg_tab.resize(n);
            for (long a = 0; a < n; ++a) {
                im.neg_tab[a] = neg_impl(im, static_cast<int>(a));
                for (long b = 0; b < n; ++b) {
                    im.add_tab[a * n + b] = add_impl(im, static_cast<int>(a), static_cast<int>(b));
                    im.mul_tab[a * n + b] = mul_impl(im, static_cast<int>(a), static_cast<int>(b));
                }
            }
        }
        // characteristic = additive order of 1
        {
            long c = 1;
            int acc = im.one_idx;
            while (acc != 0) {
                acc = im.add_tab.empty() ? add_impl(im, acc, im.one_idx)
                                         : im.add_tab[acc * im.card + im.one_idx];
                ++c;
            }
            im.charac = c;
        }
        // canonical images of 0..charac-1
        im.from_int_tab.resize(im.charac);
        {
            int acc = 0;
            for (long i = 0; i < im.charac; ++i) {
                im.from_int_tab[i] = acc;
                acc = im.add_tab.empty() ? add_impl(im, acc, im.one_idx)
                                         : im.add_tab[acc * im.card + im.one_idx];
            }
        }
        if (im.card <= kTableLimit) verify_axioms(im);
    }

    static void verify_axioms(const Impl& im) {
        long n = im.card;
        auto ad = [&](long a, long b) { return im.add_tab[a * n + b]; };
        auto mu = [&](long a, long b) { return im.mul_tab[a * n + b]; };
        for (long a = 0; a < n; ++a) {
            if (ad(a, 0) != a) throw error("ring axiom failure: additive identity");
            if (mu(a, im.one_idx) != a) throw error("ring axiom failure: multiplicative identity");
            if (ad(a, im.neg_tab[a]) != 0) throw error("ring axiom failure: additive inverse");
            for (long b = 0; b < n; ++b) {
                if (ad(a, b) != ad(b, a)) throw error("ring axiom failure: + commutativity");
                if (mu(a, b) != mu(b, a)) throw error("ring axiom failure: * commutativity");
                for (long c = 0; c < n; ++c) {
                    if (ad(ad(a, b), c) != ad(a, ad(b, c)))
                        throw error("ring axiom failure: + associativity");
                    if (mu(mu(a, b), c) != mu(a, mu(b, c)))
                        throw error("ring axiom failure: * associativity");
                    if (mu(a, ad(b, c)) != ad(mu(a, b), mu(a, c)))
                        throw error("ring axiom failure: distributivity");
                }
            }
        }
    }

    std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------------------
// Ring spec grammar:  Z/<n> | GF(<q>)[: <monic poly in one variable>]
//                     | <spec> x <spec>      (left-associative product)

namespace detail {

inline std::vector<std::string> split_ring_product(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] != 'x') continue;
        bool lead_ws = i > 0 && std::isspace(static_cast<unsigned char>(s[i - 1]));
        if (!lead_ws) continue;
        std::size_t j = i + 1;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i + 1) continue;  // needs trailing whitespace
        if (j < s.size() && (s.compare(j, 2, "Z/") == 0 || s.compare(j, 3, "GF(") == 0)) {
            parts.push_back(s.substr(start, i - start));
            start = j;
            i = j - 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

}  // namespace detail

inline FiniteRing make_ring(const std::string& spec) {
    std::vector<std::string> parts = detail::split_ring_product(spec);
    std::vector<FiniteRing> rings;
    for (std::string part : parts) {
        part = detail::strip(part);
        if (part.rfind("Z/", 0) == 0) {
            std::string num = detail::strip(part.substr(2));
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad ring spec '" + part + "'");
            long n = std::stol(num);
            if (n <= 0) throw parse_error("Z/n requires n >= 1");
            rings.push_back(FiniteRing::zmod(n));
        } else if (part.rfind("GF(", 0) == 0) {
            std::size_t close = part.find(')');
            if (close == std::string::npos) throw parse_error("bad ring spec '" + part + "'");
            std::string num = detail::strip(part.substr(3, close - 3));
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad ring spec '" + part + "'");
            long q = std::stol(num);
            long p = 0, k = 0;
            for (long d = 2; d <= q; ++d) {
                if (q % d == 0) {
                    p = d;
                    long m = q;
                    while (m % p == 0) {
                        m /= p;
                        ++k;
                    }
                    if (m != 1) throw parse_error("GF(q): q must be a prime power");
                    break;
                }
            }
            if (p == 0) throw parse_error("GF(q): q must be a prime power");
            std::string rest = detail::strip(part.substr(close + 1));
            std::vector<long> modulus;
            if (!rest.empty()) {
                if (rest[0] != ':') throw parse_error("bad ring spec '" + part + "'");
                std::string ptext = detail::strip(rest.substr(1));
                VarTable vt;
                Poly mp = parse_poly(ptext, vt);
                if (vt.names.size() > 1)
                    throw parse_error("GF modulus must be a polynomial in one variable");
                modulus.assign(static_cast<std::size_t>(k) + 1, 0);
                for (auto& [mono, c] : mp.terms()) {
                    int e = mono.degree();
                    if (e > k) throw parse_error("GF modulus degree exceeds k");
                    modulus[e] = static_cast<long>(mod_pos(c, Int(p)));
                }
            }
            rings.push_back(FiniteRing::gf(p, k, modulus));
        } else {
            throw parse_error("bad ring spec '" + part + "'");
        }
    }
    if (rings.size() == 1) return rings[0];
    return FiniteRing::product(std::move(rings));
}

// ---------------------------------------------------------------------------
// Evaluation of an integer polynomial at a point of A (the canonical map
// Z -> A is applied to coefficients).

inline int evaluate(const Poly& p, const FiniteRing& A, const std::vector<int>& point) {
    if (p.modulus() != 0) throw invalid_argument_error("evaluate: expected integer coefficients");
    if (p.max_var() >= static_cast<int>(point.size()))
        throw invalid_argument_error("evaluate: unassigned variable");
    int acc = A.zero();
    for (auto& [m, c] : p.terms()) {
        int t = A.from_int(c);
        for (auto& [v, e] : m.factors()) t = A.mul(t, A.pow(point[v], static_cast<unsigned>(e)));
        acc = A.add(acc, t);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Structural queries.

inline std::vector<int> ring_units(const FiniteRing& A) {
    std::vector<int> us;
    for (int a = 0; a < A.cardinality(); ++a)
        for (int b = 0; b < A.cardinality(); ++b)
            if (A.mul(a, b) == A.one()) {
                us.push_back(a);
                break;
            }
    return us;
}

inline std::vector<int> ring_idempotents(const FiniteRing& A) {
    std::vector<int> es;
    for (int a = 0; a < A.cardinality(); ++a)
        if (A.mul(a, a) == a) es.push_back(a);
    return es;
}

struct DomainCheck {
    bool is_domain;
    int a = -1, b = -1;  // witness zero divisors when !is_domain
};

inline DomainCheck ring_domain_check(const FiniteRing& A) {
    if (A.is_trivial()) return {false, 0, 0};  // the trivial ring is not a domain
    for (int a = 1; a < A.cardinality(); ++a)
        for (int b = 1; b < A.cardinality(); ++b)
            if (A.mul(a, b) == A.zero()) return {false, a, b};
    return {true};
}

inline bool ring_is_field(const FiniteRing& A) {
    if (A.is_trivial()) return false;
    return static_cast<long>(ring_units(A).size()) == A.cardinality() - 1;
}

enum class RingQuery { Characteristic, Units, Idempotents, IsField, IsDomain, Elements };

struct RingQueryAnswer {
    long characteristic = 0;
    std::vector<int> elements;      // Units / Idempotents / Elements
    std::vector<std::string> names;  // Elements
    bool flag = false;               // IsField / IsDomain
    DomainCheck domain;              // IsDomain witness
};

inline RingQueryAnswer ring_query(const FiniteRing& A, RingQuery q) {
    RingQueryAnswer ans;
    switch (q) {
        case RingQuery::Characteristic: ans.characteristic = A.characteristic(); break;
        case RingQuery::Units: ans.elements = ring_units(A); break;
        case RingQuery::Idempotents: ans.elements = ring_idempotents(A); break;
        case RingQuery::IsField: ans.flag = ring_is_field(A); break;
        case RingQuery::IsDomain:
            ans.domain = ring_domain_check(A);
            ans.flag = ans.domain.is_domain;
            break;
        case RingQuery::Elements:
            for (int a = 0; a < A.cardinality(); ++a) {
                ans.elements.push_back(a);
                ans.names.push_back(A.elem_name(a));
            }
            break;
    }
    return ans;
}

// ---------------------------------------------------------------------------
// Unital ring homomorphisms A -> B by exhaustive search over images of a ring
// generating set, with propagation pruning; every found map is re-verified on
// all pairs.

struct RingHom {
    FiniteRing dom, cod;
    std::vector<int> images;  // size |dom|
    bool injective = false;
    bool surjective = false;

    int operator()(int a) const { return images[a]; }

    std::vector<int> kernel() const {
        std::vector<int> ks;
        for (int a = 0; a < dom.cardinality(); ++a)
            if (images[a] == cod.zero()) ks.push_back(a);
        return ks;
    }
};

namespace detail {

inline std::vector<char> ring_closure(const FiniteRing& A, const std::vector<int>& seed) {
    std::vector<char> in(A.cardinality(), 0);
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    push(A.zero());
    push(A.one());
    for (int s : seed) push(s);
    std::vector<int> current(work);
    for (std::size_t i = 0; i < work.size(); ++i) {
        int x = work[i];
        push(A.neg(x));
        for (std::size_t j = 0; j <= i; ++j) {
            int y = work[j];
            push(A.add(x, y));
            push(A.mul(x, y));
        }
    }
    return in;
}

inline std::vector<int> ring_generators(const FiniteRing& A) {
    std::vector<int> gens;
    std::vector<char> in = ring_closure(A, gens);
    for (int x = 0; x < A.cardinality(); ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        in = ring_closure(A, gens);
    }
    return gens;
}

}  // namespace detail

inline std::vector<RingHom> ring_homs(const FiniteRing& A, const FiniteRing& B,
                                      const EnumBudget& budget = {}) {
    std::vector<int> gens = detail::ring_generators(A);
    // search-space guard
    {
        Int space = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            space *= B.cardinality();
            if (space > budget.max_tuples)
                throw budget_error("ring_homs: search budget exceeded");
        }
    }
    const int nA = static_cast<int>(A.cardinality());
    const int nB = static_cast<int>(B.cardinality());

    std::vector<RingHom> found;
    std::vector<int> choice(gens.size(), 0);

    auto try_tuple = [&]() {
        std::vector<int> img(nA, -1);
        std::vector<int> defined;
        bool ok = true;
        auto assign = [&](int a, int b) {
            if (img[a] == -1) {
                img[a] = b;
                defined.push_back(a);
                return true;
            }
            return img[a] == b;
        };
        ok = assign(A.zero(), B.zero()) && ok;
        ok = ok && assign(A.one(), B.one());
        for (std::size_t i = 0; ok && i < gens.size(); ++i) ok = assign(gens[i], choice[i]);
        for (std::size_t i = 0; ok && i < defined.size(); ++i) {
            int x = defined[i];
            if (!assign(A.neg(x), B.neg(img[x]))) { ok = false; break; }
            for (std::size_t j = 0; j <= i; ++j) {
                int y = defined[j];
                if (!assign(A.add(x, y), B.add(img[x], img[y])) ||
                    !assign(A.mul(x, y), B.mul(img[x], img[y]))) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) return;
        for (int a = 0; a < nA; ++a)
            if (img[a] == -1) return;  // generators failed to generate: cannot happen
        // full verification
        for (int a = 0; a < nA; ++a)
            for (int b = 0; b < nA; ++b) {
                if (img[A.add(a, b)] != B.add(img[a], img[b])) return;
                if (img[A.mul(a, b)] != B.mul(img[a], img[b])) return;
            }
        RingHom h{A, B, img};
        std::vector<char> hit(nB, 0);
        bool inj = true;
        for (int a = 0; a < nA; ++a) {
            if (hit[img[a]]) inj = false;
            hit[img[a]] = 1;
        }
        h.injective = inj;
        h.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
        found.push_back(std::move(h));
    };

    // odometer over generator images
    while (true) {
        try_tuple();
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == nB) choice[i++] = 0;
        if (i == choice.size()) break;
        if (choice.empty()) break;
    }
    std::sort(found.begin(), found.end(),
              [](const RingHom& x, const RingHom& y) { return x.images < y.images; });
    return found;
}

inline RingHom identity_hom(const FiniteRing& A) {
    RingHom h{A, A, {}};
    h.images.resize(A.cardinality());
    std::iota(h.images.begin(), h.images.end(), 0);
    h.injective = h.surjective = true;
    return h;
}

inline RingHom compose_hom(const RingHom& f, const RingHom& g) {  // g after f
    if (!f.cod.same_as(g.dom)) throw invalid_argument_error("compose_hom: domain mismatch");
    RingHom h{f.dom, g.cod, {}};
    h.images.resize(f.dom.cardinality());
    for (int a = 0; a < f.dom.cardinality(); ++a) h.images[a] = g.images[f.images[a]];
    std::vector<char> hit(g.cod.cardinality(), 0);
    bool inj = true;
    for (int a = 0; a < f.dom.cardinality(); ++a) {
        if (hit[h.images[a]]) inj = false;
        hit[h.images[a]] = 1;
    }
    h.injective = inj;
    h.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    return h;
}

}  // namespace ringlab

#endif

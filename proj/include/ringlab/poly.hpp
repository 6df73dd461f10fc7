// Exact multivariate polynomial arithmetic over Z and Z/n.
//
// Variables are nonnegative integer indices; user-facing names live in a
// separate symbol table.  A polynomial is a canonical keyed term map, so
// equality of values is equality of representations.  An optional modulus
// tag turns the same representation into Z/n coefficients (reduced to
// [0, n)).
#ifndef RINGLAB_POLY_HPP
#define RINGLAB_POLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/ints.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Monomial: sparse exponent vector, sorted by variable index, no zeros.

class Monomial {
  public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial var(int v, int e = 1) {
        Monomial m;
        if (e < 0) throw invalid_argument_error("Monomial: negative exponent");
        if (e > 0) m.exps_.emplace_back(v, e);
        return m;
    }

    static Monomial from_pairs(std::vector<std::pair<int, int>> ve) {
        Monomial m;
        std::sort(ve.begin(), ve.end());
        for (auto& [v, e] : ve) {
            if (e < 0) throw invalid_argument_error("Monomial: negative exponent");
            if (e == 0) continue;
            if (!m.exps_.empty() && m.exps_.back().first == v)
                throw invalid_argument_error("Monomial: duplicate variable");
            m.exps_.emplace_back(v, e);
        }
        return m;
    }

    const std::vector<std::pair<int, int>>& factors() const { return exps_; }

    bool is_one() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps_) d += e;
        return d;
    }

    int exponent(int v) const {
        for (auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    int max_var() const { return exps_.empty() ? -1 : exps_.back().first; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
                r.exps_.push_back(exps_[i++]);
            else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
                r.exps_.push_back(o.exps_[j++]);
            else {
                r.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        std::size_t j = 0;
        for (auto& [v, e] : exps_) {
            while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
            if (j == o.exps_.size() || o.exps_[j].first != v || o.exps_[j].second < e) return false;
        }
        return true;
    }

    // this / d; precondition: d divides this.
    Monomial quotient_by(const Monomial& d) const {
        Monomial r;
        std::size_t j = 0;
        for (auto& [v, e] : exps_) {
            int sub = 0;
            while (j < d.exps_.size() && d.exps_[j].first < v) ++j;
            if (j < d.exps_.size() && d.exps_[j].first == v) sub = d.exps_[j].second;
            if (sub > e) throw invalid_argument_error("Monomial::quotient_by: not divisible");
            if (e - sub > 0) r.exps_.emplace_back(v, e - sub);
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.exps_.size() || j < b.exps_.size()) {
            if (j == b.exps_.size() || (i < a.exps_.size() && a.exps_[i].first < b.exps_[j].first))
                r.exps_.push_back(a.exps_[i++]);
            else if (i == a.exps_.size() || b.exps_[j].first < a.exps_[i].first)
                r.exps_.push_back(b.exps_[j++]);
            else {
                r.exps_.emplace_back(a.exps_[i].first, std::max(a.exps_[i].second, b.exps_[j].second));
                ++i, ++j;
            }
        }
        return r;
    }

    Monomial shift_vars(int offset) const {
        Monomial r;
        for (auto& [v, e] : exps_) r.exps_.emplace_back(v + offset, e);
        return r;
    }

    Monomial rename_vars(const std::vector<int>& perm) const {
        std::vector<std::pair<int, int>> ve;
        for (auto& [v, e] : exps_) {
            if (v >= static_cast<int>(perm.size()))
                throw invalid_argument_error("Monomial::rename_vars: variable out of range");
            ve.emplace_back(perm[v], e);
        }
        return from_pairs(std::move(ve));
    }

    // Storage order only: a deterministic total order used as map key, not a
    // monomial order.
    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<std::pair<int, int>> exps_;
};

// ---------------------------------------------------------------------------
// Monomial orders: lexicographic and graded-lexicographic with a variable
// priority permutation.  Both are multiplicative total orders with 1 minimal.

struct MonomialOrder {
    enum class Kind { Lex, GrLex };

    Kind kind = Kind::GrLex;
    // Variable indices from most to least significant; variables not listed
    // rank after all listed ones, in increasing index order.
    std::vector<int> priority;

    static MonomialOrder lex(std::vector<int> prio = {}) { return {Kind::Lex, std::move(prio)}; }
    static MonomialOrder grlex(std::vector<int> prio = {}) { return {Kind::GrLex, std::move(prio)}; }

    // Lex order eliminating `elim` (those variables rank highest).
    static MonomialOrder elimination(std::vector<int> elim) { return {Kind::Lex, std::move(elim)}; }

    long rank(int v) const {
        for (std::size_t i = 0; i < priority.size(); ++i)
            if (priority[i] == v) return static_cast<long>(i);
        return static_cast<long>(priority.size()) + v;
    }

    // true iff a < b.
    bool less(const Monomial& a, const Monomial& b) const {
        if (kind == Kind::GrLex) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db;
        }
        // lex comparison along the ranked variable sequence
        std::vector<std::pair<long, int>> ea, eb;
        for (auto& [v, e] : a.factors()) ea.emplace_back(rank(v), e);
        for (auto& [v, e] : b.factors()) eb.emplace_back(rank(v), e);
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        std::size_t i = 0, j = 0;
        while (i < ea.size() || j < eb.size()) {
            if (j == eb.size()) return false;                 // a has an extra high-ranked var
            if (i == ea.size()) return true;
            if (ea[i].first != eb[j].first) return ea[i].first > eb[j].first;
            if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
            ++i, ++j;
        }
        return false;  // equal
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

// ---------------------------------------------------------------------------
// Poly

class Poly {
  public:
    using TermMap = std::map<Monomial, Int>;

    Poly() = default;

    static Poly zero(const Int& modulus = 0) {
        Poly p;
        p.modulus_ = modulus;
        return p;
    }

    static Poly constant(const Int& c, const Int& modulus = 0) {
        Poly p = zero(modulus);
        p.add_term(Monomial::one(), c);
        return p;
    }

    static Poly variable(int v, const Int& modulus = 0) {
        Poly p = zero(modulus);
        p.add_term(Monomial::var(v), 1);
        return p;
    }

    static Poly monomial(const Monomial& m, const Int& c, const Int& modulus = 0) {
        Poly p = zero(modulus);
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    const Int& modulus() const { return modulus_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Int constant_value() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool operator==(const Poly&) const = default;

    // Deterministic strict order on polynomials (term maps then modulus);
    // used only for canonical sorting of collections.
    bool operator<(const Poly& o) const {
        if (terms_ != o.terms_) return terms_ < o.terms_;
        return modulus_ < o.modulus_;
    }

    int total_degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    std::vector<int> variables() const {
        std::vector<int> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    int max_var() const {
        int mv = -1;
        for (auto& [m, c] : terms_) mv = std::max(mv, m.max_var());
        return mv;
    }

    void add_term(const Monomial& m, const Int& c) {
        Int cc = modulus_ > 0 ? mod_pos(c, modulus_) : c;
        if (cc == 0) return;
        auto [it, inserted] = terms_.emplace(m, cc);
        if (!inserted) {
            it->second += cc;
            if (modulus_ > 0) it->second = mod_pos(it->second, modulus_);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r = zero(modulus_);
        for (auto& [m, c] : terms_) r.add_term(m, -c);
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_modulus(o);
        Poly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        check_modulus(o);
        Poly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_modulus(o);
        Poly r = zero(modulus_);
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
        return r;
    }

    Poly operator*(const Int& k) const {
        Poly r = zero(modulus_);
        for (auto& [m, c] : terms_) r.add_term(m, c * k);
        return r;
    }

    Poly mul_term(const Monomial& m, const Int& c) const {
        Poly r = zero(modulus_);
        for (auto& [m1, c1] : terms_) r.add_term(m1.times(m), c1 * c);
        return r;
    }

    Poly pow(unsigned k) const {
        Poly r = constant(1, modulus_);
        Poly base = *this;
        while (k > 0) {
            if (k & 1u) r = r * base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    // Retag with a modulus (or drop it with m = 0), renormalizing coefficients.
    Poly with_modulus(const Int& m) const {
        Poly r = zero(m);
        for (auto& [mono, c] : terms_) r.add_term(mono, c);
        return r;
    }

    Poly shift_vars(int offset) const {
        Poly r = zero(modulus_);
        for (auto& [m, c] : terms_) r.add_term(m.shift_vars(offset), c);
        return r;
    }

    Poly rename_vars(const std::vector<int>& perm) const {
        Poly r = zero(modulus_);
        for (auto& [m, c] : terms_) r.add_term(m.rename_vars(perm), c);
        return r;
    }

    // Image of this under the homomorphism extending var i -> images[i].
    // Every variable must have an image; images must share the modulus tag.
    Poly substitute(const std::vector<Poly>& images) const {
        for (const Poly& q : images)
            if (q.modulus() != modulus_)
                throw invalid_argument_error("substitute: modulus mismatch");
        if (max_var() >= static_cast<int>(images.size()))
            throw invalid_argument_error("substitute: unassigned variable");
        // per-variable power cache
        std::map<int, std::vector<Poly>> powers;
        auto power = [&](int v, int e) -> const Poly& {
            auto& vec = powers[v];
            if (vec.empty()) vec.push_back(constant(1, modulus_));
            while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * images[v]);
            return vec[e];
        };
        Poly r = zero(modulus_);
        for (auto& [m, c] : terms_) {
            Poly t = constant(c, modulus_);
            for (auto& [v, e] : m.factors()) t = t * power(v, e);
            r = r + t;
        }
        return r;
    }

    Poly substitute(const std::map<int, Poly>& images) const {
        int mv = max_var();
        std::vector<Poly> vec;
        for (int v = 0; v <= mv; ++v) {
            auto it = images.find(v);
            if (it == images.end()) {
                if (exponent_of_var_present(v))
                    throw invalid_argument_error("substitute: unassigned variable");
                vec.push_back(variable(v, modulus_));  // unused slot
            } else {
                vec.push_back(it->second);
            }
        }
        return substitute(vec);
    }

    std::pair<Monomial, Int> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw invalid_argument_error("leading_term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // gcd of coefficients, >= 0; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (auto& [m, c] : terms_) {
            g = int_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    Poly primitive_part() const {
        Int c = content();
        if (c == 0 || c == 1) return *this;
        Poly r = zero(modulus_);
        for (auto& [m, co] : terms_) r.add_term(m, co / c);
        return r;
    }

    Poly divide_by_int(const Int& k) const {  // exact
        Poly r = zero(modulus_);
        for (auto& [m, c] : terms_) {
            if (c % k != 0) throw invalid_argument_error("divide_by_int: not exact");
            r.add_term(m, c / k);
        }
        return r;
    }

  private:
    bool exponent_of_var_present(int v) const {
        for (auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    void check_modulus(const Poly& o) const {
        if (modulus_ != o.modulus_) throw invalid_argument_error("polynomial modulus mismatch");
    }

    TermMap terms_;
    Int modulus_ = 0;  // 0 = integer coefficients
};

inline Poly operator*(const Int& k, const Poly& p) { return p * k; }

enum class PolyOp { Add, Sub, Mul, Pow };

inline Poly arith(const Poly& a, const Poly& b, PolyOp op, unsigned k = 0) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
        case PolyOp::Pow: return a.pow(k);
    }
    throw invalid_argument_error("arith: bad op");
}

// ---------------------------------------------------------------------------
// Multivariate division with remainder.
//
// Modes: over Z/p (exact, polynomials carry the modulus), over the rationals
// represented by integer polynomials (the result satisfies
// scale * p = sum q_i d_i + r for a positive integer scale), and over Z with
// the strong (Euclidean, truncated-quotient) reduction rule used by strong
// Groebner bases.

enum class CoeffMode { IntegersStrong, RationalsScaled, ModP };

struct DivisionResult {
    std::vector<Poly> quotients;
    Poly remainder;
    Int scale = 1;  // always 1 except in RationalsScaled mode
};

inline DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors,
                             const MonomialOrder& ord, CoeffMode mode) {
    for (const Poly& d : divisors) {
        if (d.is_zero()) throw invalid_argument_error("divide: zero divisor");
        if (d.modulus() != p.modulus()) throw invalid_argument_error("divide: modulus mismatch");
        if (mode == CoeffMode::ModP && p.modulus() == 0)
            throw invalid_argument_error("divide: ModP requires a modulus tag");
        if (mode != CoeffMode::ModP && p.modulus() != 0)
            throw invalid_argument_error("divide: integer mode requires untagged polynomials");
    }
    DivisionResult res;
    res.quotients.assign(divisors.size(), Poly::zero(p.modulus()));
    res.remainder = Poly::zero(p.modulus());
    if (divisors.empty()) {
        res.remainder = p;
        return res;
    }

    std::vector<std::pair<Monomial, Int>> lts;
    lts.reserve(divisors.size());
    for (const Poly& d : divisors) lts.push_back(d.leading_term(ord));

    Poly work = p;
    while (!work.is_zero()) {
        auto [u, c] = work.leading_term(ord);
        bool reduced = false;
        for (std::size_t j = 0; j < divisors.size(); ++j) {
            auto& [v, a] = lts[j];
            if (!v.divides(u)) continue;
            Monomial shift = u.quotient_by(v);
            Int q;
            if (mode == CoeffMode::ModP) {
                q = mod_pos(c * inv_mod(a, p.modulus()), p.modulus());
            } else if (mode == CoeffMode::RationalsScaled) {
                Int g = int_gcd(c, a);
                Int mult = int_abs(a / g);
                if (mult != 1) {
                    res.scale *= mult;
                    work = work * mult;
                    res.remainder = res.remainder * mult;
                    for (Poly& qq : res.quotients) qq = qq * mult;
                    c = c * mult;
                }
                q = c / a;  // exact now
            } else {  // IntegersStrong: truncated Euclidean quotient
                q = c / a;
                if (q == 0) continue;  // |c| < |a|: not reducible by this divisor
            }
            res.quotients[j].add_term(shift, q);
            work = work - divisors[j].mul_term(shift, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(u, c);
            Poly t = Poly::zero(p.modulus());
            t.add_term(u, c);
            work = work - t;
        }
    }

    // Postcondition: scale * p == sum quotients[i] * divisors[i] + remainder.
    Poly acc = res.remainder;
    for (std::size_t j = 0; j < divisors.size(); ++j) acc = acc + res.quotients[j] * divisors[j];
    if (!(acc == p * res.scale)) throw error("divide: internal identity check failed");
    return res;
}

// ---------------------------------------------------------------------------
// Text syntax shared with the theory DSL: integer literals, identifiers,
// + - * ^ and parentheses.

struct VarTable {
    std::vector<std::string> names;
    bool frozen = false;

    int index_of(const std::string& s) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<int>(i);
        return -1;
    }

    int lookup_or_add(const std::string& s) {
        int i = index_of(s);
        if (i >= 0) return i;
        if (frozen) throw parse_error("unknown variable '" + s + "'");
        names.push_back(s);
        return static_cast<int>(names.size()) - 1;
    }

    static VarTable fixed(std::vector<std::string> ns) {
        VarTable t;
        t.names = std::move(ns);
        t.frozen = true;
        return t;
    }
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct PolyLexer {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char get() {
        skip_ws();
        return src[pos++];
    }
};

Poly parse_expr(PolyLexer& lx, VarTable& vars);

inline Poly parse_atom(PolyLexer& lx, VarTable& vars) {
    char c = lx.peek();
    if (c == '(') {
        lx.get();
        Poly e = parse_expr(lx, vars);
        if (lx.peek() != ')') throw parse_error("expected ')'", -1, static_cast<int>(lx.pos));
        lx.get();
        return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        lx.skip_ws();
        while (lx.pos < lx.src.size() && std::isdigit(static_cast<unsigned char>(lx.src[lx.pos])))
            digits += lx.src[lx.pos++];
        return Poly::constant(Int(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        lx.skip_ws();
        while (lx.pos < lx.src.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.src[lx.pos])) || lx.src[lx.pos] == '_' ||
                lx.src[lx.pos] == '\''))
            id += lx.src[lx.pos++];
        return Poly::variable(vars.lookup_or_add(id));
    }
    throw parse_error(std::string("unexpected character '") + c + "' in polynomial", -1,
                      static_cast<int>(lx.pos));
}

inline Poly parse_factor(PolyLexer& lx, VarTable& vars) {
    Poly base = parse_atom(lx, vars);
    if (lx.peek() == '^') {
        lx.get();
        std::string digits;
        lx.skip_ws();
        while (lx.pos < lx.src.size() && std::isdigit(static_cast<unsigned char>(lx.src[lx.pos])))
            digits += lx.src[lx.pos++];
        if (digits.empty()) throw parse_error("expected exponent after '^'");
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
}

inline Poly parse_term(PolyLexer& lx, VarTable& vars) {
    Poly r = parse_factor(lx, vars);
    while (lx.peek() == '*') {
        lx.get();
        r = r * parse_factor(lx, vars);
    }
    return r;
}

inline Poly parse_expr(PolyLexer& lx, VarTable& vars) {
    bool neg = false;
    if (lx.peek() == '-') {
        lx.get();
        neg = true;
    } else if (lx.peek() == '+') {
        lx.get();
    }
    Poly r = parse_term(lx, vars);
    if (neg) r = -r;
    while (true) {
        char c = lx.peek();
        if (c == '+') {
            lx.get();
            r = r + parse_term(lx, vars);
        } else if (c == '-') {
            lx.get();
            r = r - parse_term(lx, vars);
        } else {
            break;
        }
    }
    return r;
}

}  // namespace detail

// Parse one polynomial.  New identifiers are appended to `vars` unless it is
// frozen, in which case unknown identifiers are a parse error.
inline Poly parse_poly(const std::string& text, VarTable& vars) {
    detail::PolyLexer lx{text};
    Poly p = detail::parse_expr(lx, vars);
    if (!lx.eof())
        throw parse_error("trailing input in polynomial", -1, static_cast<int>(lx.pos));
    return p;
}

inline std::string default_var_name(int v, const std::vector<std::string>& names) {
    if (v < static_cast<int>(names.size()) && !names[v].empty()) return names[v];
    return "x" + std::to_string(v);
}

// Render with terms in graded-lex descending order; stable for golden files.
inline std::string poly_to_string(const Poly& p, const std::vector<std::string>& names = {}) {
    if (p.is_zero()) return "0";
    MonomialOrder ord = MonomialOrder::grlex();
    std::vector<std::pair<Monomial, Int>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        if (ord.less(a.first, b.first)) return false;
        if (ord.less(b.first, a.first)) return true;
        return false;
    });
    std::string out;
    bool first = true;
    for (auto& [m, c] : ts) {
        Int cc = c;
        if (first) {
            if (cc < 0) {
                out += "-";
                cc = -cc;
            }
        } else {
            out += (cc < 0) ? " - " : " + ";
            if (cc < 0) cc = -cc;
        }
        first = false;
        std::string mono;
        for (auto& [v, e] : m.factors()) {
            if (!mono.empty()) mono += "*";
            mono += default_var_name(v, names);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += cc.str();
        } else {
            if (cc != 1) out += cc.str() + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace ringlab

#endif

#include "scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qalg {

/* ---------------- Param ---------------- */

Param Param::tij(int i, int j) {
    if (!(1 <= i && i < j && j <= 255)) throw usage_error("t_{ij} requires 1 <= i < j");
    Param p;
    p.kind = Kind::Tij;
    p.i = static_cast<uint8_t>(i);
    p.j = static_cast<uint8_t>(j);
    return p;
}

std::string Param::name() const {
    switch (kind) {
        case Kind::Q: return "q";
        case Kind::V: return "v";
        case Kind::T: return "t";
        case Kind::Beta: return "beta";
        case Kind::Tij:
            if (i < 10 && j < 10) return "t_" + std::to_string(i) + std::to_string(j);
            return "t_" + std::to_string(i) + "_" + std::to_string(j);
    }
    return "?";
}

std::optional<Param> Param::parse(const std::string& s) {
    if (s == "q") return q();
    if (s == "v") return v();
    if (s == "t") return t();
    if (s == "beta") return beta();
    if (s.size() > 2 && s[0] == 't' && s[1] == '_') {
        std::string rest = s.substr(2);
        size_t us = rest.find('_');
        int i = 0, j = 0;
        try {
            if (us != std::string::npos) {
                i = std::stoi(rest.substr(0, us));
                j = std::stoi(rest.substr(us + 1));
            } else if (rest.size() == 2 && isdigit(rest[0]) && isdigit(rest[1])) {
                i = rest[0] - '0';
                j = rest[1] - '0';
            } else {
                return std::nullopt;
            }
        } catch (...) {
            return std::nullopt;
        }
        if (1 <= i && i < j) return tij(i, j);
    }
    return std::nullopt;
}

/* ---------------- Ring ---------------- */

std::string Ring::name() const {
    switch (kind) {
        case Kind::Int: return "Z";
        case Kind::Rat: return "Q";
        case Kind::Fp: return "F" + std::to_string(p);
        case Kind::Poly:
        case Kind::Frac: {
            std::string s = kind == Kind::Poly ? "Q[" : "Q(";
            for (size_t i = 0; i < params.size(); ++i) {
                if (i) s += ",";
                s += params[i].name();
            }
            s += kind == Kind::Poly ? "]" : ")";
            return s;
        }
    }
    return "?";
}

static RingPtr make_ring(Ring r) { return std::make_shared<const Ring>(std::move(r)); }

RingPtr ring_int() {
    static RingPtr r = make_ring(Ring{Ring::Kind::Int, 0, {}});
    return r;
}
RingPtr ring_rat() {
    static RingPtr r = make_ring(Ring{Ring::Kind::Rat, 0, {}});
    return r;
}
RingPtr ring_fp(uint64_t p) {
    if (p < 2 || p >= (uint64_t(1) << 31)) throw usage_error("prime must fit in 31 bits");
    return make_ring(Ring{Ring::Kind::Fp, p, {}});
}
static std::vector<Param> sorted_unique(std::vector<Param> ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}
RingPtr ring_poly(std::vector<Param> params) {
    return make_ring(Ring{Ring::Kind::Poly, 0, sorted_unique(std::move(params))});
}
RingPtr ring_frac(std::vector<Param> params) {
    return make_ring(Ring{Ring::Kind::Frac, 0, sorted_unique(std::move(params))});
}

/* ---------------- raw polynomial arithmetic ---------------- */

static bool exps_less(const PolyData::Exps& a, const PolyData::Exps& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

static void poly_normalize(PolyData& p) {
    std::sort(p.terms.begin(), p.terms.end(),
              [](const auto& x, const auto& y) { return exps_less(y.first, x.first); });
    std::vector<std::pair<PolyData::Exps, mpq_class>> out;
    for (auto& t : p.terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    p.terms = std::move(out);
}

PolyData poly_zero() { return {}; }

PolyData poly_const(const mpq_class& c, size_t nparams) {
    PolyData p;
    if (c != 0) p.terms.push_back({PolyData::Exps(nparams, 0), c});
    return p;
}

PolyData poly_add(const PolyData& a, const PolyData& b) {
    PolyData r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].first == b.terms[j].first) {
            mpq_class c = a.terms[i].second + b.terms[j].second;
            if (c != 0) r.terms.push_back({a.terms[i].first, std::move(c)});
            ++i, ++j;
        } else if (exps_less(b.terms[j].first, a.terms[i].first)) {
            r.terms.push_back(a.terms[i++]);
        } else {
            r.terms.push_back(b.terms[j++]);
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

PolyData poly_neg(const PolyData& a) {
    PolyData r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

PolyData poly_mul(const PolyData& a, const PolyData& b) {
    PolyData r;
    if (a.terms.empty() || b.terms.empty()) return r;
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            PolyData::Exps e = ta.first;
            for (size_t k = 0; k < e.size(); ++k) e[k] += tb.first[k];
            r.terms.push_back({std::move(e), ta.second * tb.second});
        }
    poly_normalize(r);
    return r;
}

/* exact division of Laurent polynomials (false if remainder is nonzero) */
bool poly_div_exact(const PolyData& a, const PolyData& b, PolyData& out) {
    out = poly_zero();
    if (b.terms.empty()) return false;
    if (a.terms.empty()) return true;
    PolyData rem = a;
    const auto& lb = b.terms.front();
    /* with Laurent exponents every monomial divides every other, so plain
     * leading-term elimination terminates: nonneg shifted degrees decrease */
    size_t nv = lb.first.size();
    /* bound iterations by term count growth guard */
    size_t guard = 4 * (a.terms.size() + 4) * (b.terms.size() + 4) + 1024;
    while (!rem.terms.empty()) {
        if (guard-- == 0) return false;
        PolyData::Exps lead_e = rem.terms.front().first;
        mpq_class lead_c = rem.terms.front().second;
        PolyData::Exps e(nv);
        for (size_t k = 0; k < nv; ++k) e[k] = lead_e[k] - lb.first[k];
        PolyData q;
        q.terms.push_back({e, lead_c / lb.second});
        out = poly_add(out, q);
        rem = poly_add(rem, poly_neg(poly_mul(q, b)));
        if (!rem.terms.empty() && !exps_less(rem.terms.front().first, lead_e)) return false;
    }
    return true;
}

/* number of parameters actually occurring; fills var index if exactly one */
static int poly_active_vars(const PolyData& a, size_t& var) {
    int count = 0;
    size_t nv = a.terms.empty() ? 0 : a.terms.front().first.size();
    for (size_t k = 0; k < nv; ++k) {
        for (const auto& t : a.terms)
            if (t.first[k] != 0) {
                ++count;
                var = k;
                break;
            }
    }
    return count;
}

/* strip common monomial factor and rational content; returns a primitive
 * integer polynomial with nonnegative exponents and positive leading coeff */
static PolyData poly_primitive(const PolyData& a, PolyData::Exps* mono = nullptr) {
    PolyData r = a;
    if (r.terms.empty()) return r;
    size_t nv = r.terms.front().first.size();
    PolyData::Exps mins = r.terms.front().first;
    for (const auto& t : r.terms)
        for (size_t k = 0; k < nv; ++k) mins[k] = std::min(mins[k], t.first[k]);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : r.terms) {
        for (size_t k = 0; k < nv; ++k) t.first[k] -= mins[k];
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    mpq_class lead = r.terms.front().second * scale;
    if (lead < 0) scale = -scale;
    for (auto& t : r.terms) t.second *= scale;
    if (mono) *mono = mins;
    return r;
}

/* dense univariate view helpers for the PRS gcd */
static std::vector<mpz_class> to_dense(const PolyData& a, size_t var) {
    int deg = 0;
    for (const auto& t : a.terms) deg = std::max(deg, (int)t.first[var]);
    std::vector<mpz_class> d(deg + 1);
    for (const auto& t : a.terms) d[t.first[var]] += t.second.get_num();
    return d;
}
static void dense_trim(std::vector<mpz_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
static std::vector<mpz_class> dense_prim(std::vector<mpz_class> a) {
    dense_trim(a);
    mpz_class g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : a) c /= g;
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}
/* primitive pseudo-remainder sequence */
static std::vector<mpz_class> dense_gcd(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    a = dense_prim(std::move(a));
    b = dense_prim(std::move(b));
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        /* pseudo-remainder of a by b */
        while (a.size() >= b.size() && !a.empty()) {
            mpz_class lc = b.back();
            size_t shift = a.size() - b.size();
            mpz_class la = a.back();
            for (auto& c : a) c *= lc;
            for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
            dense_trim(a);
        }
        a = dense_prim(std::move(a));
        std::swap(a, b);
    }
    return a;
}

PolyData poly_gcd(const PolyData& a, const PolyData& b) {
    if (a.terms.empty()) return poly_primitive(b);
    if (b.terms.empty()) return poly_primitive(a);
    size_t nv = a.terms.front().first.size();
    PolyData::Exps ma, mb;
    PolyData pa = poly_primitive(a, &ma);
    PolyData pb = poly_primitive(b, &mb);
    PolyData::Exps mcommon(nv);
    for (size_t k = 0; k < nv; ++k) mcommon[k] = std::min(ma[k], mb[k]);
    PolyData mono;
    mono.terms.push_back({mcommon, mpq_class(1)});

    PolyData core = poly_const(1, nv);
    size_t va = 0, vb = 0;
    int ca = poly_active_vars(pa, va), cb = poly_active_vars(pb, vb);
    if (ca == 0 || cb == 0) {
        /* constants: contents already stripped, gcd is 1 */
    } else if (ca == 1 && cb == 1 && va == vb) {
        auto d = dense_gcd(to_dense(pa, va), to_dense(pb, va));
        PolyData g;
        for (size_t k = 0; k < d.size(); ++k)
            if (d[k] != 0) {
                PolyData::Exps e(nv, 0);
                e[va] = (int)k;
                g.terms.push_back({e, mpq_class(d[k])});
            }
        poly_normalize(g);
        core = g;
    } else {
        PolyData q;
        if (pa == pb)
            core = pa;
        else if (poly_div_exact(pa, pb, q))
            core = pb;
        else if (poly_div_exact(pb, pa, q))
            core = pa;
        /* else: give up, keep 1 (still a valid divisor) */
    }
    return poly_mul(mono, core);
}

std::string mpq_str(const mpq_class& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string poly_str(const PolyData& p, const std::vector<Param>& params) {
    if (p.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        mpq_class ac = abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += params[k].name();
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            s += mpq_str(ac);
        else if (ac == 1)
            s += mono;
        else
            s += mpq_str(ac) + "*" + mono;
    }
    return s;
}

/* ---------------- Scalar ---------------- */

Scalar::Scalar(RingPtr ring) : ring_(std::move(ring)) {
    if (ring_->kind == Ring::Kind::Frac) den_ = poly_const(1, ring_->params.size());
}

Scalar Scalar::from_mpq(RingPtr ring, mpq_class v) {
    Scalar s(std::move(ring));
    v.canonicalize();
    if (s.ring_->kind == Ring::Kind::Int && v.get_den() != 1)
        throw usage_error("not an integer");
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::from_poly(RingPtr ring, PolyData num, PolyData den) {
    Scalar s(std::move(ring));
    if (s.ring_->kind == Ring::Kind::Poly) {
        s.num_ = std::move(num);
        return s;
    }
    /* Frac canonicalization: reduce by gcd where we can find one, pull the
     * denominator's monomial+content into the numerator, keep den's leading
     * coefficient 1.  Equality remains semantic (cross-multiplication). */
    if (den.terms.empty()) throw usage_error("zero denominator");
    if (num.terms.empty()) {
        s.num_ = poly_zero();
        s.den_ = poly_const(1, s.ring_->params.size());
        return s;
    }
    PolyData q;
    if (poly_div_exact(num, den, q)) {
        s.num_ = std::move(q);
        s.den_ = poly_const(1, s.ring_->params.size());
        return s;
    }
    PolyData g = poly_gcd(num, den);
    bool nontrivial = g.terms.size() > 1 || (g.terms.size() == 1 && (g.terms.front().second != 1 ||
                      std::any_of(g.terms.front().first.begin(), g.terms.front().first.end(),
                                  [](int e) { return e != 0; })));
    if (nontrivial) {
        PolyData n2, d2;
        if (poly_div_exact(num, g, n2) && poly_div_exact(den, g, d2)) {
            num = std::move(n2);
            den = std::move(d2);
        }
    }
    /* unit-normalize: divide both by the denominator's leading term's
     * coefficient and monomial */
    const auto& ld = den.terms.front();
    PolyData unit;
    PolyData::Exps e = ld.first;
    unit.terms.push_back({e, ld.second});
    PolyData inv_unit;
    PolyData::Exps einv(e.size());
    for (size_t k = 0; k < e.size(); ++k) einv[k] = -e[k];
    inv_unit.terms.push_back({einv, mpq_class(1) / ld.second});
    /* monomial division is exact only in Laurent sense: fold into exponents */
    num = poly_mul(num, inv_unit);
    den = poly_mul(den, inv_unit);
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

Scalar Scalar::fp(RingPtr ring, long v) {
    if (ring->kind != Ring::Kind::Fp) throw usage_error("fp ring expected");
    Scalar s(ring);
    long m = v % (long)ring->p;
    if (m < 0) m += (long)ring->p;
    s.fp_ = (uint64_t)m;
    return s;
}

Scalar Scalar::constant(RingPtr ring, const mpq_class& v) {
    switch (ring->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return from_mpq(ring, v);
        case Ring::Kind::Fp: {
            Scalar s(ring);
            mpz_class num = v.get_num() % (long)ring->p, den = v.get_den() % (long)ring->p;
            if (num < 0) num += (long)ring->p;
            if (den == 0) throw usage_error("denominator vanishes mod p");
            Scalar d(ring);
            d.fp_ = den.get_ui();
            s.fp_ = num.get_ui();
            return s * d.inverse();
        }
        case Ring::Kind::Poly: return from_poly(ring, poly_const(v, ring->params.size()), {});
        case Ring::Kind::Frac:
            return from_poly(ring, poly_const(v, ring->params.size()),
                             poly_const(1, ring->params.size()));
    }
    throw usage_error("bad ring");
}

Scalar Scalar::param(RingPtr ring, const Param& p, int exponent) {
    if (ring->kind != Ring::Kind::Poly && ring->kind != Ring::Kind::Frac)
        throw usage_error("parameter in non-polynomial ring");
    auto it = std::find(ring->params.begin(), ring->params.end(), p);
    if (it == ring->params.end()) throw usage_error("parameter " + p.name() + " not in ring " + ring->name());
    PolyData n;
    PolyData::Exps e(ring->params.size(), 0);
    e[it - ring->params.begin()] = exponent;
    n.terms.push_back({e, mpq_class(1)});
    if (ring->kind == Ring::Kind::Poly) return from_poly(ring, std::move(n), {});
    return from_poly(ring, std::move(n), poly_const(1, ring->params.size()));
}

void Scalar::check_same_ring(const Scalar& o) const {
    if (ring_ == o.ring_) return;
    if (*ring_ == *o.ring_) return;
    throw usage_error("ring mismatch: " + ring_->name() + " vs " + o.ring_->name());
}

bool Scalar::is_zero() const {
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return rat_ == 0;
        case Ring::Kind::Fp: return fp_ == 0;
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: return num_.terms.empty();
    }
    return true;
}

bool Scalar::is_one() const {
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return rat_ == 1;
        case Ring::Kind::Fp: return fp_ == 1;
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: {
            if (num_.terms.size() != 1) return false;
            const auto& t = num_.terms.front();
            bool mono1 = std::all_of(t.first.begin(), t.first.end(), [](int e) { return e == 0; });
            if (!(mono1 && t.second == 1)) return false;
            if (ring_->kind == Ring::Kind::Poly) return true;
            return den_.terms.size() == 1 && den_.terms.front().second == 1 &&
                   std::all_of(den_.terms.front().first.begin(), den_.terms.front().first.end(),
                               [](int e) { return e == 0; });
        }
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return from_mpq(ring_, rat_ + o.rat_);
        case Ring::Kind::Fp: {
            Scalar s(ring_);
            s.fp_ = (fp_ + o.fp_) % ring_->p;
            return s;
        }
        case Ring::Kind::Poly: return from_poly(ring_, poly_add(num_, o.num_), {});
        case Ring::Kind::Frac:
            return from_poly(ring_,
                             poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_)),
                             poly_mul(den_, o.den_));
    }
    throw usage_error("bad ring");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: s.rat_ = -rat_; break;
        case Ring::Kind::Fp: s.fp_ = fp_ == 0 ? 0 : ring_->p - fp_; break;
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: s.num_ = poly_neg(num_); break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return from_mpq(ring_, rat_ * o.rat_);
        case Ring::Kind::Fp: {
            Scalar s(ring_);
            s.fp_ = (uint64_t)(((__uint128_t)fp_ * o.fp_) % ring_->p);
            return s;
        }
        case Ring::Kind::Poly: return from_poly(ring_, poly_mul(num_, o.num_), {});
        case Ring::Kind::Frac:
            return from_poly(ring_, poly_mul(num_, o.num_), poly_mul(den_, o.den_));
    }
    throw usage_error("bad ring");
}

Scalar Scalar::div_exact(const Scalar& o) const {
    check_same_ring(o);
    if (o.is_zero()) throw usage_error("division by zero");
    switch (ring_->kind) {
        case Ring::Kind::Int: {
            mpq_class q = rat_ / o.rat_;
            q.canonicalize();
            if (q.get_den() != 1) throw usage_error("inexact integer division");
            return from_mpq(ring_, q);
        }
        case Ring::Kind::Rat: return from_mpq(ring_, rat_ / o.rat_);
        case Ring::Kind::Fp: return *this * o.inverse();
        case Ring::Kind::Poly: {
            PolyData q;
            if (!poly_div_exact(num_, o.num_, q)) throw usage_error("inexact polynomial division");
            return from_poly(ring_, std::move(q), {});
        }
        case Ring::Kind::Frac: return *this * o.inverse();
    }
    throw usage_error("bad ring");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw usage_error("inverse of zero");
    switch (ring_->kind) {
        case Ring::Kind::Int:
            if (rat_ == 1 || rat_ == -1) return *this;
            throw usage_error("non-unit integer");
        case Ring::Kind::Rat: return from_mpq(ring_, 1 / rat_);
        case Ring::Kind::Fp: {
            /* Fermat */
            uint64_t r = 1, b = fp_, e = ring_->p - 2;
            while (e) {
                if (e & 1) r = (uint64_t)(((__uint128_t)r * b) % ring_->p);
                b = (uint64_t)(((__uint128_t)b * b) % ring_->p);
                e >>= 1;
            }
            Scalar s(ring_);
            s.fp_ = r;
            return s;
        }
        case Ring::Kind::Poly: {
            if (num_.terms.size() != 1) throw usage_error("non-unit polynomial");
            PolyData n;
            PolyData::Exps e(num_.terms.front().first.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = -num_.terms.front().first[k];
            n.terms.push_back({e, 1 / num_.terms.front().second});
            return from_poly(ring_, std::move(n), {});
        }
        case Ring::Kind::Frac: return from_poly(ring_, den_, num_);
    }
    throw usage_error("bad ring");
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return constant(ring_, 1);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Scalar r = constant(ring_, 1);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(ring_ == o.ring_ || *ring_ == *o.ring_)) return false;
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return rat_ == o.rat_;
        case Ring::Kind::Fp: return fp_ == o.fp_;
        case Ring::Kind::Poly: return num_ == o.num_;
        case Ring::Kind::Frac:
            /* semantic equality via cross-multiplication */
            return poly_add(poly_mul(num_, o.den_), poly_neg(poly_mul(o.num_, den_))).terms.empty();
    }
    return false;
}

bool Scalar::operator<(const Scalar& o) const {
    auto key = [](const Scalar& s) { return (int)s.ring_->kind; };
    if (key(*this) != key(o)) return key(*this) < key(o);
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return rat_ < o.rat_;
        case Ring::Kind::Fp: return fp_ < o.fp_;
        default: return str() < o.str();
    }
}

bool Scalar::is_constant() const {
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat:
        case Ring::Kind::Fp: return true;
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: {
            auto flat = [](const PolyData& p) {
                return p.terms.empty() ||
                       (p.terms.size() == 1 &&
                        std::all_of(p.terms.front().first.begin(), p.terms.front().first.end(),
                                    [](int e) { return e == 0; }));
            };
            return flat(num_) && (ring_->kind == Ring::Kind::Poly || flat(den_));
        }
    }
    return false;
}

mpq_class Scalar::rat_value() const {
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return rat_;
        case Ring::Kind::Fp: return mpq_class((long)fp_);
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: {
            if (!is_constant()) throw usage_error("non-constant scalar");
            mpq_class n = num_.terms.empty() ? mpq_class(0) : num_.terms.front().second;
            if (ring_->kind == Ring::Kind::Frac) {
                mpq_class d = den_.terms.front().second;
                return n / d;
            }
            return n;
        }
    }
    throw usage_error("bad ring");
}

Scalar Scalar::evaluate(const std::map<Param, Scalar>& bindings, RingPtr target) const {
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return constant(target, rat_);
        case Ring::Kind::Fp: throw usage_error("cannot evaluate prime-field scalar");
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: {
            auto eval_poly = [&](const PolyData& p) {
                Scalar acc(target);
                for (const auto& [e, c] : p.terms) {
                    Scalar term = constant(target, c);
                    for (size_t k = 0; k < e.size(); ++k) {
                        if (e[k] == 0) continue;
                        const Param& pm = ring_->params[k];
                        auto it = bindings.find(pm);
                        Scalar base = it != bindings.end() ? it->second.to_ring(target)
                                                           : param(target, pm);
                        term = term * base.pow(e[k]);
                    }
                    acc = acc + term;
                }
                return acc;
            };
            Scalar n = eval_poly(num_);
            if (ring_->kind == Ring::Kind::Poly) return n;
            Scalar d = eval_poly(den_);
            if (d.is_zero()) throw usage_error("substitution produced zero denominator");
            return n.div_exact(d);
        }
    }
    throw usage_error("bad ring");
}

mpq_class Scalar::derivative_at_one() const {
    if (ring_->kind != Ring::Kind::Poly)
        throw usage_error("derivative_at_one expects a Laurent polynomial");
    size_t var = SIZE_MAX;
    for (size_t k = 0; k < ring_->params.size(); ++k) {
        bool occurs = false;
        for (const auto& t : num_.terms)
            if (t.first[k] != 0) occurs = true;
        if (occurs) {
            if (ring_->params[k].kind != Param::Kind::V)
                throw usage_error("derivative_at_one: parameter other than v occurs");
            var = k;
        }
    }
    mpq_class r = 0;
    if (var == SIZE_MAX) return r;  // constant
    for (const auto& [e, c] : num_.terms) r += c * e[var];
    return r;
}

Scalar Scalar::first_order_qt(RingPtr beta_ring) const {
    if (ring_->kind != Ring::Kind::Poly) throw usage_error("first_order_qt expects a polynomial");
    size_t qi = SIZE_MAX, ti = SIZE_MAX;
    for (size_t k = 0; k < ring_->params.size(); ++k) {
        if (ring_->params[k].kind == Param::Kind::Q) qi = k;
        if (ring_->params[k].kind == Param::Kind::T) ti = k;
    }
    mpq_class dq = 0, dt = 0;
    for (const auto& [e, c] : num_.terms) {
        if (qi != SIZE_MAX) dq += c * e[qi];
        if (ti != SIZE_MAX) dt += c * e[ti];
    }
    Scalar r = constant(beta_ring, dq);
    if (dt != 0) r = r + constant(beta_ring, dt) * param(beta_ring, Param::beta());
    return r;
}

Scalar Scalar::to_ring(RingPtr target) const {
    if (ring_ == target || *ring_ == *target) {
        Scalar s(*this);
        s.ring_ = target;
        return s;
    }
    switch (ring_->kind) {
        case Ring::Kind::Int:
        case Ring::Kind::Rat: return constant(target, rat_);
        case Ring::Kind::Fp: throw usage_error("cannot convert out of a prime field");
        case Ring::Kind::Poly:
        case Ring::Kind::Frac: {
            if (is_constant()) return constant(target, rat_value());
            if (target->kind != Ring::Kind::Poly && target->kind != Ring::Kind::Frac)
                throw usage_error("cannot convert " + ring_->name() + " to " + target->name());
            /* re-express over the target's parameter list */
            std::vector<size_t> map(ring_->params.size());
            for (size_t k = 0; k < ring_->params.size(); ++k) {
                auto it = std::find(target->params.begin(), target->params.end(), ring_->params[k]);
                if (it == target->params.end())
                    throw usage_error("parameter " + ring_->params[k].name() + " not in " +
                                      target->name());
                map[k] = (size_t)(it - target->params.begin());
            }
            auto remap = [&](const PolyData& p) {
                PolyData r;
                for (const auto& [e, c] : p.terms) {
                    PolyData::Exps e2(target->params.size(), 0);
                    for (size_t k = 0; k < e.size(); ++k) e2[map[k]] = e[k];
                    r.terms.push_back({std::move(e2), c});
                }
                poly_normalize(r);
                return r;
            };
            PolyData n = remap(num_);
            if (ring_->kind == Ring::Kind::Poly) {
                if (target->kind == Ring::Kind::Poly) return from_poly(target, std::move(n), {});
                return from_poly(target, std::move(n), poly_const(1, target->params.size()));
            }
            if (target->kind == Ring::Kind::Poly)
                throw usage_error("cannot convert fraction to polynomial ring");
            return from_poly(target, std::move(n), remap(den_));
        }
    }
    throw usage_error("bad ring");
}

std::string Scalar::str() const {
    switch (ring_->kind) {
        case Ring::Kind::Int: return mpq_str(rat_);
        case Ring::Kind::Rat: return mpq_str(rat_);
        case Ring::Kind::Fp: return std::to_string(fp_);
        case Ring::Kind::Poly: return poly_str(num_, ring_->params);
        case Ring::Kind::Frac: {
            std::string n = poly_str(num_, ring_->params);
            if (den_.terms.size() == 1 && den_.terms.front().second == 1 &&
                std::all_of(den_.terms.front().first.begin(), den_.terms.front().first.end(),
                            [](int e) { return e == 0; }))
                return n;
            return "(" + n + ")/(" + poly_str(den_, ring_->params) + ")";
        }
    }
    return "?";
}

}  // namespace qalg

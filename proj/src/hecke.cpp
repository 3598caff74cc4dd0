#include "hecke.hpp"

#include <algorithm>

namespace qalg {

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int k = 0; k < n; ++k) p.img[k] = (uint8_t)(k + 1);
    return p;
}

Perm Perm::s(int n, int i) {
    if (!(1 <= i && i < n)) throw usage_error("s_i requires 1 <= i <= n-1");
    Perm p = identity(n);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

Perm Perm::transposition(int n, int i, int j) {
    if (!(1 <= i && i <= n && 1 <= j && j <= n && i != j))
        throw usage_error("bad transposition");
    Perm p = identity(n);
    std::swap(p.img[i - 1], p.img[j - 1]);
    return p;
}

Perm Perm::longest(int n) {
    Perm p;
    p.img.resize(n);
    for (int k = 0; k < n; ++k) p.img[k] = (uint8_t)(n - k);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t k = 0; k < img.size(); ++k) r.img[k] = img[o.img[k] - 1];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t k = 0; k < img.size(); ++k) r.img[img[k] - 1] = (uint8_t)(k + 1);
    return r;
}

int Perm::length() const {
    int inv = 0;
    for (size_t a = 0; a < img.size(); ++a)
        for (size_t b = a + 1; b < img.size(); ++b)
            if (img[a] > img[b]) ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (size_t k = 0; k < img.size(); ++k)
        if (img[k] != k + 1) return false;
    return true;
}

bool Perm::right_descent(int i) const { return img[i - 1] > img[i]; }

bool Perm::left_descent(int i) const {
    /* l(s_i p) < l(p) iff i appears after i+1 in one-line notation */
    int pos_i = 0, pos_i1 = 0;
    for (size_t k = 0; k < img.size(); ++k) {
        if (img[k] == i) pos_i = (int)k;
        if (img[k] == i + 1) pos_i1 = (int)k;
    }
    return pos_i > pos_i1;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm p = *this;
    while (!p.is_identity()) {
        int i = 1;
        while (!p.left_descent(i)) ++i;
        word.push_back(i);
        p = s(n(), i) * p;
    }
    return word;
}

std::string Perm::str() const {
    std::string s;
    for (size_t k = 0; k < img.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(img[k]);
    }
    return s;
}

/* ---------------- Hecke algebra ---------------- */

RingPtr HeckeElement::coeff_ring() {
    static RingPtr r = ring_poly({Param::v()});
    return r;
}

HeckeElement HeckeElement::unit(int n) {
    HeckeElement h;
    h.n = n;
    h.terms.emplace(Perm::identity(n), Scalar::constant(coeff_ring(), 1));
    return h;
}

HeckeElement HeckeElement::basis(const Perm& w) {
    HeckeElement h;
    h.n = w.n();
    h.terms.emplace(w, Scalar::constant(coeff_ring(), 1));
    return h;
}

std::string HeckeElement::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")*T[" + w.str() + "]";
    }
    return s;
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
    if (a.n != b.n) throw usage_error("rank mismatch");
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms) {
        auto it = r.terms.find(w);
        if (it == r.terms.end()) {
            r.terms.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

HeckeElement hecke_scale(const HeckeElement& a, const Scalar& c) {
    HeckeElement r;
    r.n = a.n;
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : a.terms) r.terms.emplace(w, cw * c);
    return r;
}

/* right multiplication by T_{s_i}: T_w T_s = T_{ws} if l(ws) > l(w),
 * otherwise (v - v^-1) T_w + T_{ws} */
static HeckeElement mul_by_si(const HeckeElement& a, int i) {
    RingPtr R = HeckeElement::coeff_ring();
    Scalar vv = Scalar::param(R, Param::v()) - Scalar::param(R, Param::v(), -1);
    HeckeElement r;
    r.n = a.n;
    auto add = [&](const Perm& w, const Scalar& c) {
        auto it = r.terms.find(w);
        if (it == r.terms.end()) {
            if (!c.is_zero()) r.terms.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    };
    Perm si = Perm::s(a.n, i);
    for (const auto& [w, c] : a.terms) {
        Perm ws = w * si;
        if (!w.right_descent(i)) {
            add(ws, c);
        } else {
            add(w, c * vv);
            add(ws, c);
        }
    }
    return r;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.n != b.n) throw usage_error("rank mismatch");
    HeckeElement r;
    r.n = a.n;
    for (const auto& [u, cu] : b.terms) {
        HeckeElement part = hecke_scale(a, cu);
        for (int i : u.reduced_word()) part = mul_by_si(part, i);
        r = hecke_add(r, part);
    }
    return r;
}

HeckeElement build_Dk_hecke(int k, int n) {
    if (!(2 <= k && k <= n)) throw usage_error("D_k requires 2 <= k <= n");
    HeckeElement h = HeckeElement::unit(n);
    std::vector<int> word;
    for (int i = k - 1; i >= 1; --i) word.push_back(i);
    word.push_back(1);
    for (int i = 2; i <= k - 1; ++i) word.push_back(i);
    for (int i : word) h = mul_by_si(h, i);
    return h;
}

SymGroupElement quasiclassical_limit(const HeckeElement& h) {
    SymGroupElement out;
    out.n = h.n;
    std::map<Param, Scalar> at_one{{Param::v(), Scalar::rational(1)}};
    Perm e = Perm::identity(h.n);
    /* precondition: (h - T_e) vanishes coefficientwise at v = 1 */
    for (const auto& [w, c] : h.terms) {
        mpq_class c1 = c.evaluate(at_one, ring_rat()).rat_value();
        mpq_class expect = (w == e) ? 1 : 0;
        if (c1 != expect)
            throw usage_error("quasiclassical limit: coefficient does not vanish at v=1");
    }
    for (const auto& [w, c] : h.terms) {
        /* L'Hopital: d/dv at 1 over d/dv (v - v^-1) at 1 = 2 */
        mpq_class lim = c.derivative_at_one() / 2;
        if (lim == 0) continue;
        if (lim.get_den() != 1) throw usage_error("quasiclassical limit is not integral");
        out.terms.emplace(w, lim);
    }
    return out;
}

SymGroupElement jm_sum_transpositions(int k, int n) {
    SymGroupElement out;
    out.n = n;
    for (int i = 1; i < k; ++i) out.terms.emplace(Perm::transposition(n, i, k), 1);
    return out;
}

std::string SymGroupElement::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) s += " + ";
        first = false;
        s += mpq_str(c) + "*[" + w.str() + "]";
    }
    return s;
}

}  // namespace qalg

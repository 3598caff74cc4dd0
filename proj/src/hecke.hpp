#pragma once

#include <map>

#include "scalar.hpp"

namespace qalg {

/* Permutation of 1..n in one-line notation; composition (a*b)(x) = a(b(x)). */
struct Perm {
    std::vector<uint8_t> img;  // img[k] = image of k+1

    static Perm identity(int n);
    static Perm s(int n, int i);                  // adjacent transposition (i,i+1)
    static Perm transposition(int n, int i, int j);
    static Perm longest(int n);                   // w0

    int n() const { return (int)img.size(); }
    int operator()(int k) const { return img[k - 1]; }
    Perm operator*(const Perm& o) const;  // compose: apply o first
    Perm inverse() const;
    int length() const;  // inversion count
    bool is_identity() const;
    bool right_descent(int i) const;  // l(p s_i) < l(p)
    bool left_descent(int i) const;   // l(s_i p) < l(p)
    std::vector<int> reduced_word() const;
    std::string str() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img <=> b.img; }
};

/* Iwahori-Hecke algebra element in the T_w basis over Laurent polynomials in
 * v = q^{1/2}. */
struct HeckeElement {
    int n = 0;
    std::map<Perm, Scalar> terms;  // no zero coefficients

    static RingPtr coeff_ring();  // Q[v^{+-1}]
    static HeckeElement unit(int n);
    static HeckeElement basis(const Perm& w);
    std::string str() const;
    bool operator==(const HeckeElement& o) const { return n == o.n && terms == o.terms; }
};

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeElement& a, const Scalar& c);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/* image of D_k = g_{k-1}...g_1^2...g_{k-1} */
HeckeElement build_Dk_hecke(int k, int n);

/* exact element of the group ring Z[S_n] */
struct SymGroupElement {
    int n = 0;
    std::map<Perm, mpq_class> terms;
    bool operator==(const SymGroupElement& o) const { return n == o.n && terms == o.terms; }
    std::string str() const;
};

/* lim_{v->1} (h - T_e)/(v - v^{-1}) computed per coefficient; requires every
 * coefficient of h - T_e to vanish at v = 1 and the limit to be integral */
SymGroupElement quasiclassical_limit(const HeckeElement& h);

/* sum of the transpositions (i,k), i < k */
SymGroupElement jm_sum_transpositions(int k, int n);

}  // namespace qalg

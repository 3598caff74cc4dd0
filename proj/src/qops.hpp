#pragma once

#include <functional>
#include <optional>

#include "scalar.hpp"

namespace qalg {

/* Polynomial in x_1..x_n with Scalar coefficients (typically Laurent in
 * {q,t} or in {beta}).  Terms sorted lexicographically descending. */
struct XPoly {
    RingPtr ring;
    int n = 0;
    std::vector<std::pair<std::vector<int32_t>, Scalar>> terms;

    XPoly() : ring(ring_int()) {}
    XPoly(RingPtr r, int rank) : ring(std::move(r)), n(rank) {}
    static XPoly zero(RingPtr r, int n) { return XPoly(std::move(r), n); }
    static XPoly one(RingPtr r, int n);
    static XPoly var(RingPtr r, int n, int i);
    static XPoly monomial(RingPtr r, int n, const std::vector<int32_t>& e, const Scalar& c);

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;
    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator-() const;
    XPoly scaled(const Scalar& c) const;
    /* exact division; throws on nonzero remainder */
    XPoly div_exact(const XPoly& d) const;
    bool operator==(const XPoly& o) const;
    std::string str() const;
    void normalize();
};

/* Composable exact operator; deg_shift bounds the total-degree increase. */
struct PolyOperator {
    std::function<XPoly(const XPoly&)> fn;
    int deg_shift = 0;
    XPoly operator()(const XPoly& f) const { return fn(f); }
};

PolyOperator op_identity();
PolyOperator op_compose(PolyOperator a, PolyOperator b);  // apply b first
PolyOperator op_add(PolyOperator a, PolyOperator b);
PolyOperator op_scale(PolyOperator a, Scalar c);
PolyOperator op_mul_by(XPoly m);

PolyOperator op_sij(RingPtr r, int n, int i, int j);  // exchange x_i, x_j
PolyOperator op_s0(RingPtr r, int n);                 // x_1 <-> q x_n
PolyOperator op_tau(RingPtr r, int n, int i);         // x_i -> q x_i
PolyOperator op_w(RingPtr r, int n);                  // x_i -> x_{i-1}, x_1 -> q x_n
PolyOperator op_dd(RingPtr r, int n, int i, int j);   // (f - s_ij f)/(x_i - x_j)
PolyOperator op_euler(RingPtr r, int n, int j);       // x_j d/dx_j

PolyOperator op_T(RingPtr r, int n, int a);     // a = 0..n-1 (affine at a = 0)
PolyOperator op_Tinv(RingPtr r, int n, int a);  // via the quadratic relation
PolyOperator op_Tij(RingPtr r, int n, int i, int j);
PolyOperator op_Tij_inv(RingPtr r, int n, int i, int j);
PolyOperator op_Tbar(RingPtr r, int n, int i, int j);
PolyOperator op_Tbar_inv(RingPtr r, int n, int i, int j);

PolyOperator build_Yk(int k, int n, RingPtr r);
PolyOperator build_Ykstar(int k, int n, RingPtr r);
PolyOperator build_Yi_product_form(int i, int n, RingPtr r);
PolyOperator build_classical_Dj(int j, int n, RingPtr beta_ring);

/* all monomials of total degree <= d, deterministic order */
std::vector<XPoly> monomial_slice(RingPtr r, int n, int d);

/* exhaustive check on the degree <= d slice; returns the first failing
 * monomial or nullopt on agreement */
std::optional<XPoly> op_equal_on_slice(const PolyOperator& a, const PolyOperator& b, RingPtr r,
                                       int n, int d);

/* text combinators: T(1)*T(2)*w, Y(2), Ystar(1), Yprod(1), Dcl(3), x(1),
 * s(1,3), s0, dd(1,2), tau(1), Tinv(0), Tbar(1,2), Tbarinv(1,2), id,
 * scalar atoms q/t/beta/integers, +, -, ^ */
PolyOperator parse_operator(const std::string& text, RingPtr r, int n);

/* default coefficient ring for parsed operator expressions */
RingPtr qops_default_ring();

}  // namespace qalg

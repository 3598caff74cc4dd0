#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qalg {

/* Error taxonomy shared across the library.  guard_error maps to the
 * resource-guard exit code, usage_error to the usage exit code; everything
 * else derived from std::runtime_error is a mathematical failure. */
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Formal parameter of a coefficient ring: one of q, v, t, beta, or an
 * indexed pair parameter t_{ij} with i < j. */
struct Param {
    enum class Kind : uint8_t { Q, V, T, Beta, Tij };
    Kind kind = Kind::T;
    uint8_t i = 0, j = 0;  // only for Tij; requires i < j

    static Param q() { return {Kind::Q, 0, 0}; }
    static Param v() { return {Kind::V, 0, 0}; }
    static Param t() { return {Kind::T, 0, 0}; }
    static Param beta() { return {Kind::Beta, 0, 0}; }
    static Param tij(int i, int j);

    std::string name() const;
    static std::optional<Param> parse(const std::string& s);

    friend bool operator==(const Param&, const Param&) = default;
    friend auto operator<=>(const Param& a, const Param& b) {
        if (a.kind != b.kind) return a.kind <=> b.kind;
        if (a.i != b.i) return a.i <=> b.i;
        return a.j <=> b.j;
    }
};

/* Sparse Laurent polynomial over Q in a fixed parameter list.  Exponent
 * vectors are parallel to the owning ring's parameter list; negative
 * exponents are allowed.  Terms are kept sorted (lexicographically
 * descending exponent vectors) with no zero coefficients. */
struct PolyData {
    using Exps = std::vector<int32_t>;
    std::vector<std::pair<Exps, mpq_class>> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const PolyData&, const PolyData&) = default;
};

/* Coefficient-ring descriptor.  Scalars hold a shared pointer to one of
 * these; all arithmetic requires both operands to agree. */
struct Ring {
    enum class Kind : uint8_t { Int, Rat, Fp, Poly, Frac };
    Kind kind = Kind::Int;
    uint64_t p = 0;             // Fp modulus (odd prime or 2)
    std::vector<Param> params;  // Poly/Frac only; sorted, unique

    friend bool operator==(const Ring&, const Ring&) = default;
    std::string name() const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr ring_int();
RingPtr ring_rat();
RingPtr ring_fp(uint64_t p);
RingPtr ring_poly(std::vector<Param> params);
RingPtr ring_frac(std::vector<Param> params);

/* Exact scalar: integer, rational, prime-field element, Laurent polynomial,
 * or quotient of Laurent polynomials.  Values are immutable and always in
 * canonical form (fractions reduced, zero terms absent, exponents sorted). */
class Scalar {
  public:
    Scalar() : ring_(ring_int()) {}
    explicit Scalar(RingPtr ring);  // zero of the ring

    static Scalar integer(long v) { return from_mpq(ring_int(), mpq_class(v)); }
    static Scalar integer(const mpz_class& v) { return from_mpq(ring_int(), mpq_class(v)); }
    static Scalar rational(const mpq_class& v) { return from_mpq(ring_rat(), v); }
    static Scalar fp(RingPtr ring, long v);
    /* constant polynomial / fraction */
    static Scalar constant(RingPtr ring, const mpq_class& v);
    static Scalar param(RingPtr ring, const Param& p, int exponent = 1);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    /* Exact division; throws if the divisor does not divide exactly in the
     * ring (or is zero). */
    Scalar div_exact(const Scalar& o) const;
    /* Multiplicative inverse where the ring is a field (Rat, Fp, Frac) or
     * the element is a unit (integer +-1, Laurent monomial +-m). */
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /* total order used only for deterministic iteration/rendering */
    bool operator<(const Scalar& o) const;

    /* Substitute parameters; unbound parameters are retained.  The result
     * lives in `target` (which must contain the retained parameters). */
    Scalar evaluate(const std::map<Param, Scalar>& bindings, RingPtr target) const;
    /* (d/dv f)(1) for a Laurent polynomial in v only. */
    mpq_class derivative_at_one() const;
    /* (d/dq + beta d/dt) f |_{q=t=1} for a Laurent polynomial in {q,t};
     * returns a polynomial in beta. */
    Scalar first_order_qt(RingPtr beta_ring) const;

    /* Rational value of a constant scalar (Int/Rat, or constant Poly/Frac). */
    mpq_class rat_value() const;
    bool is_constant() const;

    std::string str() const;

    /* conversion into another ring (Int -> Rat -> Poly/Frac embeddings,
     * and reduction mod p for Fp targets) */
    Scalar to_ring(RingPtr target) const;

    uint64_t fp_value() const { return fp_; }
    const PolyData& num() const { return num_; }
    const PolyData& den() const { return den_; }
    const mpq_class& q_value() const { return rat_; }

  private:
    static Scalar from_mpq(RingPtr ring, mpq_class v);
    static Scalar from_poly(RingPtr ring, PolyData num, PolyData den);
    void check_same_ring(const Scalar& o) const;

    RingPtr ring_;
    mpq_class rat_;   // Int/Rat
    uint64_t fp_ = 0; // Fp
    PolyData num_;    // Poly/Frac
    PolyData den_;    // Frac (one() for Poly)
};

/* ---- polynomial helpers shared with other modules ---- */

PolyData poly_zero();
PolyData poly_const(const mpq_class& c, size_t nparams);
PolyData poly_add(const PolyData& a, const PolyData& b);
PolyData poly_neg(const PolyData& a);
PolyData poly_mul(const PolyData& a, const PolyData& b);
bool poly_div_exact(const PolyData& a, const PolyData& b, PolyData& out);
/* gcd: full for univariate input, best-effort (monomial/content/quotient)
 * for multivariate input; always a valid common divisor. */
PolyData poly_gcd(const PolyData& a, const PolyData& b);
std::string poly_str(const PolyData& p, const std::vector<Param>& params);

std::string mpq_str(const mpq_class& v);

}  // namespace qalg

#pragma once

#include <memory>
#include <vector>

#include "catalog.hpp"
#include "freealg.hpp"

namespace qalg {

/* Coefficient field for completion / rank work. */
struct FieldDesc {
    enum class Kind : uint8_t { Q, Fp, Frac };
    Kind kind = Kind::Q;
    uint64_t p = 0;
    std::vector<Param> params;

    static FieldDesc rationals() { return {Kind::Q, 0, {}}; }
    static FieldDesc prime(uint64_t p) { return {Kind::Fp, p, {}}; }
    static FieldDesc fractions(std::vector<Param> ps) { return {Kind::Frac, 0, std::move(ps)}; }
    RingPtr ring() const;
    std::string name() const;
    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/* default primes for the F_p pre-pass / torsion probing */
std::vector<uint64_t> default_primes();

struct ReductionLog {
    struct Step {
        uint32_t rule;
        uint32_t pos;
    };
    std::vector<Step> steps;
};

enum class Verdict { ProvedZero, NonzeroWitness, Inconclusive };

struct DimReport {
    std::vector<mpz_class> dims;  // index = degree
    FieldDesc field;
    bool filtered = false;
    std::vector<long> dims_long() const;
};

struct CompleteOptions {
    size_t term_guard = 2000000;
};

class RewriteBasis {
  public:
    RewriteBasis() = default;

    static RewriteBasis complete(const Presentation& p, int degree, const FieldDesc& field,
                                 const CompleteOptions& opts = {});

    bool valid() const { return impl_ != nullptr; }
    const Presentation& presentation() const;
    const FieldDesc& field() const;
    int complete_to() const;
    bool homogeneous() const;
    /* inhomogeneous completion processes a +2 degree margin; true if new
     * rules appeared inside the margin */
    bool margin_new_rules() const;

    size_t rule_count() const;
    std::vector<Word> leading_words() const;
    NCPoly rule_poly(size_t idx) const;  // lw - tail as an NCPoly

    NCPoly normal_form(const NCPoly& e, ReductionLog* log = nullptr) const;
    Verdict check_zero(const NCPoly& e) const;

    /* standard-monomial count per degree (homogeneous presentations) */
    DimReport graded_dims(int max_degree) const;
    mpz_class graded_dim(int degree) const;
    /* successive quotient dims of the span of normal forms of words of
     * degree <= k */
    DimReport filtered_dims(int max_degree) const;
    /* successive quotient dims of the span of products of the given
     * degree-1 generators */
    DimReport subalgebra_dims(const std::vector<NCPoly>& gens, int max_degree) const;

    std::vector<Word> standard_words(int degree, size_t cap = 1u << 20) const;

    /* replay a recorded reduction independently of the reducer's strategy;
     * verifies each step and returns the re-derived result */
    NCPoly replay(const NCPoly& input, const ReductionLog& log) const;

    /* re-checks every overlap ambiguity of degree <= complete_to (test aid) */
    bool verify_confluent() const;

    struct Base;

  private:
    std::shared_ptr<const Base> impl_;
};

/* ideal-slice rank oracle: dim_k = #words(k) - rank{u * r * w} computed by
 * sparse elimination over the field, independent of any rewriting */
mpz_class oracle_graded_dim(const Presentation& p, int degree, const FieldDesc& field);

struct TorsionReport {
    std::vector<uint64_t> primes;
    std::vector<mpz_class> dims_q;                 // per degree
    std::vector<std::vector<mpz_class>> dims_fp;   // [prime][degree]
    std::vector<std::pair<uint64_t, int>> flags;   // (prime, degree) discrepancies
};

TorsionReport torsion_probe(const Presentation& p, int max_degree,
                            const std::vector<uint64_t>& primes);

}  // namespace qalg

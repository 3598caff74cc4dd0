#pragma once

#include "freealg.hpp"
#include "hecke.hpp"

namespace qalg {

/* Braid word on the standard generators: letters +-1..+-(n-1). */
struct BraidWord {
    int n = 0;
    std::vector<int> letters;

    static BraidWord parse(const std::string& text, int n);
    BraidWord operator*(const BraidWord& o) const;
    BraidWord inverse() const;
    std::string str() const;
};

/* Left greedy normal form: Delta^inf times a left-weighted sequence of
 * permutation braids (none trivial, none Delta). */
struct GarsideNF {
    int inf = 0;
    std::vector<Perm> factors;
    friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
    std::string str() const;
};

GarsideNF garside_nf(const BraidWord& w);

/* D_2 = g_1^2, D_k = g_{k-1}...g_2 g_1^2 g_2...g_{k-1} */
BraidWord build_Dk_word(int k, int n);
/* g_{ij} = (g_{j-1}...g_{i+1}) g_i^2 (g_{j-1}...g_{i+1})^{-1} */
BraidWord build_gij_word(int i, int j, int n);
/* pi(Y_k^*) with pi(w) = g_{n-1}...g_1 substituted */
BraidWord pi_ykstar_word(int k, int n);

struct PureRelationsReport {
    int checked = 0;
    int failed = 0;
    int interleaved_excluded = 0;
    std::vector<std::string> failures;
};
/* pure braid group relations checked via normal-form equality */
PureRelationsReport verify_pure_relations(int n);

/* epsilon^2 coefficient of prod (1 + eps X_{p}) over the given pair sequence */
NCPoly eps2_coefficient(RingPtr ring, int n, const std::vector<std::pair<int, int>>& seq);

}  // namespace qalg

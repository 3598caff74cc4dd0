#pragma once

#include "engine.hpp"

namespace qalg {

/* theta_j = -sum_{i<j} [ij] + sum_{j<k} [jk] */
NCPoly dunkl_theta(RingPtr ring, int n, int j);
/* d_j = sum_{i<j} [ij], 2 <= j <= n */
NCPoly jm_d(RingPtr ring, int n, int j);
/* x_j + theta_j */
NCPoly tilde_theta(RingPtr ring, int n, int j);
/* F_n = sum_i [i,n][i+1,n]...[n-1,n][1,n]...[i,n] */
NCPoly f_n(RingPtr ring, int n);
/* Phi_m, an element of rank m+1 built from the column of [i,m+1] letters;
 * satisfies Phi_m writes [12] into F_{m+1} under the commutator */
NCPoly phi_n(RingPtr ring, int m);
/* column monomial [A] attached to a composition A of n-2 */
NCPoly lambda_monomial(RingPtr ring, int n, const std::vector<int>& A);
/* the parameter-side expansion equal to F_n in the t-deformed algebra */
NCPoly f_n_rhs(RingPtr ring, int n);
/* generalized elementary function e_m(X_A|t) evaluated at the theta's */
NCPoly em_general(RingPtr ring, int n, int m, const std::vector<int>& A);
/* right-hand side of the Pieri expansion over I/J sequences */
NCPoly pieri_rhs(RingPtr ring, int n, const std::vector<int>& A, int m);
/* T_{ij} = t - (x_j - t x_i)[ij] */
NCPoly tij_element(RingPtr ring, int n, int i, int j);

/* all compositions of total into k positive parts */
std::vector<std::vector<int>> compositions(int total, int k);

/* Move every variable letter left of every bracket letter using the
 * straightening relations; the variable prefix is sorted (variables
 * commute).  The result equals the input modulo the affine relations. */
NCPoly straighten(const NCPoly& e);

/* straighten, then reduce each word's bracket part with the given
 * bracket-only basis; zero result certifies that e vanishes in the affine
 * quotient */
NCPoly straighten_reduce(const RewriteBasis& bracket_basis, const NCPoly& e);

struct PairVerdict {
    int i, j;
    Verdict verdict;
};
std::vector<PairVerdict> check_commuting_family(const RewriteBasis& rb,
                                                const std::vector<NCPoly>& elems);

}  // namespace qalg

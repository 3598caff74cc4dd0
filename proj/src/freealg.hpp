#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qalg {

/* Generator symbol: bracket generator [i,j] with 1 <= i < j <= n, or a
 * commuting-variable generator x_i with 1 <= i <= n.  Within a fixed rank n
 * the symbols are totally ordered: brackets ascending by (j, i), then
 * variables ascending by i; every variable is greater than every bracket. */
struct GenSym {
    bool is_var = false;
    uint8_t i = 0, j = 0;  // bracket: pair (i,j); var: index in i

    static GenSym bracket(int i, int j);
    static GenSym var(int i);
    std::string str() const;
    friend bool operator==(const GenSym&, const GenSym&) = default;
};

/* Letters of a word are stored as order codes: bracket (i,j) |-> position in
 * the (j,i)-ascending enumeration, variables after all brackets.  Codes are
 * rank-dependent, so every word/poly carries its ambient rank. */
using Letter = uint8_t;
using Word = std::basic_string<Letter>;

int bracket_count(int n);
Letter letter_of(const GenSym& g, int n);
GenSym sym_of(Letter code, int n);

/* Degree-lexicographic order: longer words are larger; equal lengths compare
 * lexicographically on letter codes scanning from the right. */
bool word_less(const Word& a, const Word& b);
std::string word_str(const Word& w, int n);

/* Finitely supported linear combination of words with Scalar coefficients.
 * Terms are sorted descending in the monomial order with no zero entries. */
struct NCPoly {
    RingPtr ring;
    int n = 0;
    std::vector<std::pair<Word, Scalar>> terms;

    NCPoly() : ring(ring_int()) {}
    NCPoly(RingPtr r, int rank) : ring(std::move(r)), n(rank) {}

    static NCPoly zero(RingPtr r, int n) { return NCPoly(std::move(r), n); }
    static NCPoly one(RingPtr r, int n);
    static NCPoly monomial(RingPtr r, int n, const Word& w, const Scalar& c);
    static NCPoly gen(RingPtr r, int n, const GenSym& g);

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : (int)terms.front().first.size(); }
    bool homogeneous() const;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const;  // concatenation product
    NCPoly scaled(const Scalar& c) const;
    NCPoly to_ring(RingPtr target) const;

    bool operator==(const NCPoly& o) const;
    std::string str() const;
};

NCPoly nc_mul(const NCPoly& a, const NCPoly& b);
NCPoly commutator(const NCPoly& a, const NCPoly& b);

/* S_n action on bracket letters: Bracket(i,j) -> Bracket sorted(w(i), w(j)).
 * w is one-line notation (w[k-1] = image of k).  Variables are rejected.
 * Under the antisymmetric convention a bracket whose endpoints invert
 * contributes a sign (the generators satisfy [ji] = -[ij]); the symmetric
 * convention (X_{ji} = X_{ij}) leaves coefficients unchanged.  Pair
 * parameters t_{ij} in the coefficients are relabeled alongside. */
enum class BracketConvention { Antisymmetric, Symmetric };
NCPoly relabel(const NCPoly& p, const std::vector<int>& w,
               BracketConvention conv = BracketConvention::Antisymmetric);

void add_term(std::vector<std::pair<Word, Scalar>>& terms, const Word& w, const Scalar& c);
void sort_terms(std::vector<std::pair<Word, Scalar>>& terms);

/* Text syntax: `[i,j]`, `x_i`, `*` juxtaposition, integer or parameter
 * coefficients, parentheses, `+`/`-`, `^` powers.  Example:
 * `[1,2]*[2,3] - [2,3]*[1,3] - [1,3]*[1,2]`. */
NCPoly parse_element(const std::string& text, RingPtr ring, int n);

}  // namespace qalg

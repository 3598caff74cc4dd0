#include "elements.hpp"

#include <algorithm>

namespace qalg {

namespace {
NCPoly gen(RingPtr r, int n, int i, int j) { return NCPoly::gen(r, n, GenSym::bracket(i, j)); }
Scalar one_of(RingPtr r) { return Scalar::constant(r, 1); }
}  // namespace

NCPoly dunkl_theta(RingPtr ring, int n, int j) {
    if (!(1 <= j && j <= n)) throw usage_error("theta index out of range");
    NCPoly p = NCPoly::zero(ring, n);
    for (int i = 1; i < j; ++i) p = p - gen(ring, n, i, j);
    for (int k = j + 1; k <= n; ++k) p = p + gen(ring, n, j, k);
    return p;
}

NCPoly jm_d(RingPtr ring, int n, int j) {
    if (!(2 <= j && j <= n)) throw usage_error("d_j requires 2 <= j <= n");
    NCPoly p = NCPoly::zero(ring, n);
    for (int i = 1; i < j; ++i) p = p + gen(ring, n, i, j);
    return p;
}

NCPoly tilde_theta(RingPtr ring, int n, int j) {
    return NCPoly::gen(ring, n, GenSym::var(j)) + dunkl_theta(ring, n, j);
}

NCPoly f_n(RingPtr ring, int n) {
    if (n < 2) throw usage_error("F_n requires n >= 2");
    NCPoly p = NCPoly::zero(ring, n);
    for (int i = 1; i <= n - 1; ++i) {
        Word w;
        for (int a = i; a <= n - 1; ++a) w.push_back(letter_of(GenSym::bracket(a, n), n));
        for (int a = 1; a <= i; ++a) w.push_back(letter_of(GenSym::bracket(a, n), n));
        p = p + NCPoly::monomial(ring, n, w, one_of(ring));
    }
    return p;
}

NCPoly phi_n(RingPtr ring, int m) {
    if (m < 2) throw usage_error("Phi_m requires m >= 2");
    int n = m + 1;
    NCPoly p = NCPoly::zero(ring, n);
    for (int i = 2; i <= m; ++i) {
        Word w;
        for (int a = i; a <= m; ++a) w.push_back(letter_of(GenSym::bracket(a, n), n));
        for (int a = 2; a <= i; ++a) w.push_back(letter_of(GenSym::bracket(a, n), n));
        p = p + NCPoly::monomial(ring, n, w, one_of(ring));
    }
    return p;
}

std::vector<std::vector<int>> compositions(int total, int k) {
    std::vector<std::vector<int>> out;
    if (k <= 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(k, 1);
    /* recursive enumeration in lexicographic order */
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == k - 1) {
            if (rem >= 1) {
                cur[idx] = rem;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 1; v <= rem - (k - idx - 1); ++v) {
            cur[idx] = v;
            rec(idx + 1, rem - v);
        }
    };
    rec(0, total);
    return out;
}

NCPoly lambda_monomial(RingPtr ring, int n, const std::vector<int>& A) {
    int k = (int)A.size();
    int total = 0;
    for (int a : A) {
        if (a <= 0) throw usage_error("composition parts must be positive");
        total += a;
    }
    if (total != n - 2) throw usage_error("composition must sum to n-2");
    Word w;
    int s = 0;  // running sum of (a_s - 1)
    for (int j = 1; j <= k; ++j) {
        s += A[j - 1] - 1;
        for (int l = 1; l <= A[j - 1]; ++l) {
            int first = n - k + l - 2 - s;
            int second = n - k + j - 1;
            if (!(1 <= first && first < second && second <= n))
                throw usage_error("composition monomial index out of range");
            w.push_back(letter_of(GenSym::bracket(first, second), n));
        }
    }
    return NCPoly::monomial(ring, n, w, one_of(ring));
}

NCPoly f_n_rhs(RingPtr ring, int n) {
    NCPoly p = NCPoly::zero(ring, n);
    for (int k = 2; k <= n - 1; ++k) {
        Scalar coeff = Scalar::param(ring, Param::tij(k, n)) -
                       Scalar::param(ring, Param::tij(k - 1, n));
        if ((n - k - 1) % 2 == 1) coeff = -coeff;
        NCPoly inner = NCPoly::zero(ring, n);
        for (const auto& A : compositions(n - 2, n - k))
            inner = inner + lambda_monomial(ring, n, A);
        p = p + inner.scaled(coeff);
    }
    return p;
}

/* all ways to pick `l` disjoint (min,max) pairs from the sorted set S: the
 * smallest remaining element is either left unpaired or paired with any
 * larger one, so each pair set is produced exactly once */
static void pair_sets(const std::vector<int>& S, int l, std::vector<std::pair<int, int>>& cur,
                      std::vector<int> rest,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
    if ((int)cur.size() == l) {
        out.push_back(cur);
        return;
    }
    if ((int)rest.size() < 2 * (l - (int)cur.size())) return;
    int i = rest.front();
    std::vector<int> skipped(rest.begin() + 1, rest.end());
    pair_sets(S, l, cur, skipped, out);
    for (size_t t = 1; t < rest.size(); ++t) {
        int j = rest[t];
        cur.push_back({i, j});
        std::vector<int> next;
        for (size_t u = 1; u < rest.size(); ++u)
            if (u != t) next.push_back(rest[u]);
        pair_sets(S, l, cur, next, out);
        cur.pop_back();
    }
}

NCPoly em_general(RingPtr ring, int n, int m, const std::vector<int>& A) {
    std::vector<int> S = A;
    std::sort(S.begin(), S.end());
    NCPoly acc = NCPoly::zero(ring, n);
    for (int l = 0; 2 * l <= m; ++l) {
        if (m - 2 * l > (int)S.size() - 2 * l) continue;  // not enough remaining
        std::vector<std::vector<std::pair<int, int>>> matchings;
        std::vector<std::pair<int, int>> cur;
        pair_sets(S, l, cur, S, matchings);
        for (const auto& pairs : matchings) {
            Scalar coeff = one_of(ring);
            std::vector<int> used;
            for (auto [i, j] : pairs) {
                coeff = coeff * Scalar::param(ring, Param::tij(i, j));
                used.push_back(i);
                used.push_back(j);
            }
            std::vector<int> rest;
            for (int a : S)
                if (std::find(used.begin(), used.end(), a) == used.end()) rest.push_back(a);
            /* e_{m-2l} of the thetas indexed by rest, ascending products */
            int d = m - 2 * l;
            std::vector<int> idx(d);
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == d) {
                    NCPoly prod = NCPoly::one(ring, n);
                    for (int q = 0; q < d; ++q) prod = prod * dunkl_theta(ring, n, idx[q]);
                    acc = acc + prod.scaled(coeff);
                    return;
                }
                for (int t = start; t < (int)rest.size(); ++t) {
                    idx[depth] = rest[t];
                    rec(t + 1, depth + 1);
                }
            };
            rec(0, 0);
        }
    }
    return acc;
}

NCPoly pieri_rhs(RingPtr ring, int n, const std::vector<int>& A, int m) {
    std::vector<int> inA = A, outA;
    std::sort(inA.begin(), inA.end());
    for (int a = 1; a <= n; ++a)
        if (std::find(inA.begin(), inA.end(), a) == inA.end()) outA.push_back(a);
    NCPoly acc = NCPoly::zero(ring, n);
    /* J: weakly increasing sequences over outA; I: distinct sequences over A */
    std::vector<int> J(m), I(m);
    std::function<void(int, int)> recJ;
    std::function<void(int, std::vector<bool>&)> recI = [&](int depth, std::vector<bool>& used) {
        if (depth == m) {
            Word w;
            int sign = 1;
            for (int k = 0; k < m; ++k) {
                int i = I[k], j = J[k];
                if (i > j) {
                    std::swap(i, j);
                    sign = -sign;
                }
                w.push_back(letter_of(GenSym::bracket(i, j), n));
            }
            acc = acc + NCPoly::monomial(ring, n, w, Scalar::constant(ring, sign));
            return;
        }
        for (size_t t = 0; t < inA.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            I[depth] = inA[t];
            recI(depth + 1, used);
            used[t] = false;
        }
    };
    recJ = [&](int depth, int start) {
        if (depth == m) {
            std::vector<bool> used(inA.size(), false);
            recI(0, used);
            return;
        }
        for (int t = start; t < (int)outA.size(); ++t) {
            J[depth] = outA[t];
            recJ(depth + 1, t);
        }
    };
    if (m <= (int)inA.size()) recJ(0, 0);
    return acc;
}

NCPoly tij_element(RingPtr ring, int n, int i, int j) {
    Scalar t = Scalar::param(ring, Param::t());
    NCPoly xj = NCPoly::gen(ring, n, GenSym::var(j));
    NCPoly xi = NCPoly::gen(ring, n, GenSym::var(i));
    NCPoly br = gen(ring, n, i, j);
    return NCPoly::monomial(ring, n, Word(), t) - (xj - xi.scaled(t)) * br;
}

NCPoly straighten(const NCPoly& e) {
    const int n = e.n;
    const int nb = bracket_count(n);
    auto is_var = [&](Letter l) { return l >= nb; };
    std::vector<std::pair<Word, Scalar>> work(e.terms.begin(), e.terms.end());
    std::vector<std::pair<Word, Scalar>> done;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        /* leftmost (bracket, var) adjacency */
        size_t pos = Word::npos;
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (!is_var(w[k]) && is_var(w[k + 1])) {
                pos = k;
                break;
            }
        if (pos == Word::npos) {
            /* straight: sort the variable prefix (variables commute) */
            size_t vend = 0;
            while (vend < w.size() && is_var(w[vend])) ++vend;
            std::sort(w.begin(), w.begin() + vend);
            done.push_back({std::move(w), std::move(c)});
            continue;
        }
        GenSym br = sym_of(w[pos], n);
        GenSym var = sym_of(w[pos + 1], n);
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        if (var.i != br.i && var.i != br.j) {
            /* [ab] x_i = x_i [ab] */
            work.push_back({std::move(swapped), std::move(c)});
        } else if (var.i == br.i) {
            /* [ij] x_i = x_j [ij] - 1 */
            swapped[pos] = letter_of(GenSym::var(br.j), n);
            Word dropped = w.substr(0, pos) + w.substr(pos + 2);
            work.push_back({std::move(swapped), c});
            work.push_back({std::move(dropped), -c});
        } else {
            /* [ij] x_j = x_i [ij] + 1 */
            swapped[pos] = letter_of(GenSym::var(br.i), n);
            Word dropped = w.substr(0, pos) + w.substr(pos + 2);
            work.push_back({std::move(swapped), c});
            work.push_back({std::move(dropped), c});
        }
    }
    NCPoly out(e.ring, n);
    out.terms = std::move(done);
    sort_terms(out.terms);
    return out;
}

NCPoly straighten_reduce(const RewriteBasis& bracket_basis, const NCPoly& e) {
    NCPoly s = straighten(e);
    const int n = e.n;
    const int nb = bracket_count(n);
    NCPoly acc(bracket_basis.field().ring(), n);
    for (const auto& [w, c] : s.terms) {
        size_t vend = 0;
        while (vend < w.size() && w[vend] >= nb) ++vend;
        Word xpart = w.substr(0, vend);
        Word bpart = w.substr(vend);
        NCPoly b = NCPoly::monomial(e.ring, n, bpart, c);
        NCPoly nf = bracket_basis.normal_form(b);
        for (auto& [bw, bc] : nf.terms) {
            Word full = xpart + bw;
            acc.terms.push_back({std::move(full), bc});
        }
    }
    sort_terms(acc.terms);
    return acc;
}

std::vector<PairVerdict> check_commuting_family(const RewriteBasis& rb,
                                                const std::vector<NCPoly>& elems) {
    std::vector<PairVerdict> out;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            out.push_back({(int)i, (int)j, rb.check_zero(commutator(elems[i], elems[j]))});
    return out;
}

}  // namespace qalg

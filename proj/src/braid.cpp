#include "braid.hpp"

#include <algorithm>
#include <sstream>

namespace qalg {

BraidWord BraidWord::parse(const std::string& text, int n) {
    BraidWord w;
    w.n = n;
    std::istringstream in(text);
    long v;
    while (in >> v) {
        if (v == 0 || std::abs(v) >= n) throw usage_error("braid letter out of range");
        w.letters.push_back((int)v);
    }
    if (!in.eof()) throw usage_error("bad braid word syntax");
    return w;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (n != o.n) throw usage_error("rank mismatch");
    BraidWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

BraidWord BraidWord::inverse() const {
    BraidWord w;
    w.n = n;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

std::string BraidWord::str() const {
    std::string s;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(letters[k]);
    }
    return s;
}

std::string GarsideNF::str() const {
    std::string s = "D^" + std::to_string(inf) + " |";
    for (const auto& p : factors) s += " " + p.str() + " ;";
    if (!factors.empty()) s.pop_back();
    return s;
}

GarsideNF garside_nf(const BraidWord& bw) {
    const int n = bw.n;
    Perm w0 = Perm::longest(n);
    int inf = 0;
    std::vector<Perm> F;
    auto tau = [&](const Perm& p) { return w0 * p * w0; };

    for (int letter : bw.letters) {
        if (letter > 0) {
            F.push_back(Perm::s(n, letter));
        } else {
            /* g_i^{-1} = Delta^{-1} (Delta g_i^{-1}); slide Delta^{-1} left */
            --inf;
            for (auto& p : F) p = tau(p);
            F.push_back(w0 * Perm::s(n, -letter));
        }
    }

    /* left-weighted normalization by local sliding */
    bool changed = true;
    while (changed) {
        changed = false;
        F.erase(std::remove_if(F.begin(), F.end(), [](const Perm& p) { return p.is_identity(); }),
                F.end());
        for (size_t k = 0; k + 1 < F.size(); ++k) {
            Perm& A = F[k];
            Perm& B = F[k + 1];
            bool moved = true;
            while (moved) {
                moved = false;
                for (int i = 1; i < n; ++i) {
                    if (B.left_descent(i) && !A.right_descent(i)) {
                        A = A * Perm::s(n, i);
                        B = Perm::s(n, i) * B;
                        moved = true;
                        changed = true;
                    }
                }
            }
        }
    }
    F.erase(std::remove_if(F.begin(), F.end(), [](const Perm& p) { return p.is_identity(); }),
            F.end());
    while (!F.empty() && F.front() == w0) {
        ++inf;
        F.erase(F.begin());
    }
    return GarsideNF{inf, std::move(F)};
}

BraidWord build_Dk_word(int k, int n) {
    if (!(2 <= k && k <= n)) throw usage_error("D_k requires 2 <= k <= n");
    BraidWord w;
    w.n = n;
    for (int i = k - 1; i >= 1; --i) w.letters.push_back(i);
    w.letters.push_back(1);
    for (int i = 2; i <= k - 1; ++i) w.letters.push_back(i);
    return w;
}

BraidWord build_gij_word(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw usage_error("g_{ij} requires i < j <= n");
    BraidWord conj;
    conj.n = n;
    for (int a = j - 1; a >= i + 1; --a) conj.letters.push_back(a);
    BraidWord core;
    core.n = n;
    core.letters = {i, i};
    return conj * core * conj.inverse();
}

BraidWord pi_ykstar_word(int k, int n) {
    if (!(1 <= k && k <= n)) throw usage_error("Y_k^* requires 1 <= k <= n");
    BraidWord w;
    w.n = n;
    for (int i = k; i <= n - 1; ++i) w.letters.push_back(-i);
    for (int i = n - 1; i >= 1; --i) w.letters.push_back(i);  // pi(w)
    for (int i = 1; i <= k - 1; ++i) w.letters.push_back(i);
    return w;
}

PureRelationsReport verify_pure_relations(int n) {
    PureRelationsReport rep;
    auto g = [&](int i, int j) { return build_gij_word(i, j, n); };
    auto check = [&](const BraidWord& a, const BraidWord& b, const std::string& what) {
        ++rep.checked;
        if (!(garside_nf(a) == garside_nf(b))) {
            ++rep.failed;
            rep.failures.push_back(what);
        }
    };
    /* commuting pairs with all indices distinct.  At group level this holds
     * for separated (i<j<k<l) and nested (i<k<l<j) pairs; the interleaved
     * shape i<k<j<l generates a free subgroup and is excluded (the normal
     * forms genuinely differ there). */
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                    if (k == i || k == j || l == i || l == j) continue;
                    bool interleaved = (i < k && k < j && j < l) || (k < i && i < l && l < j);
                    if (interleaved) {
                        ++rep.interleaved_excluded;
                        continue;
                    }
                    check(g(i, j) * g(k, l), g(k, l) * g(i, j),
                          "commute " + std::to_string(i) + std::to_string(j) + "," +
                              std::to_string(k) + std::to_string(l));
                }
    /* triple relations */
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                std::string tag = std::to_string(i) + std::to_string(j) + std::to_string(k);
                check(g(i, j) * g(i, k) * g(j, k), g(i, k) * g(j, k) * g(i, j), "triple1 " + tag);
                check(g(i, k) * g(j, k) * g(i, j), g(j, k) * g(i, j) * g(i, k), "triple2 " + tag);
            }
    /* quadruple relation */
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    check(g(i, k) * g(j, k) * g(j, l) * g(i, j),
                          g(j, k) * g(j, l) * g(i, j) * g(i, k),
                          "quad " + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                              std::to_string(l));
    return rep;
}

NCPoly eps2_coefficient(RingPtr ring, int n, const std::vector<std::pair<int, int>>& seq) {
    NCPoly acc = NCPoly::zero(ring, n);
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b) {
            NCPoly xa = NCPoly::gen(ring, n, GenSym::bracket(seq[a].first, seq[a].second));
            NCPoly xb = NCPoly::gen(ring, n, GenSym::bracket(seq[b].first, seq[b].second));
            acc = acc + xa * xb;
        }
    return acc;
}

}  // namespace qalg

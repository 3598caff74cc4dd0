#include "engine.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace qalg {

RingPtr FieldDesc::ring() const {
    switch (kind) {
        case Kind::Q: return ring_rat();
        case Kind::Fp: return ring_fp(p);
        case Kind::Frac: return ring_frac(params);
    }
    throw usage_error("bad field");
}

std::string FieldDesc::name() const { return ring()->name(); }

std::vector<uint64_t> default_primes() { return {2147483629ull, 2147483587ull, 2147483579ull}; }

/* ---------------- coefficient fields ---------------- */

namespace {

struct QF {
    using E = mpq_class;
    RingPtr ring_ = ring_rat();
    bool is_zero(const E& e) const { return e == 0; }
    E one() const { return E(1); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E div(const E& a, const E& b) const { return a / b; }
    E neg(const E& a) const { return -a; }
    E from_scalar(const Scalar& s) const { return s.to_ring(ring_).q_value(); }
    Scalar to_scalar(const E& e) const { return Scalar::rational(e); }
};

struct FpF {
    uint64_t p;
    RingPtr ring_;
    explicit FpF(uint64_t prime) : p(prime), ring_(ring_fp(prime)) {}
    using E = uint64_t;
    bool is_zero(E e) const { return e == 0; }
    E one() const { return 1; }
    E add(E a, E b) const { return (a + b) % p; }
    E sub(E a, E b) const { return (a + p - b) % p; }
    E mul(E a, E b) const { return (E)(((__uint128_t)a * b) % p); }
    E neg(E a) const { return a == 0 ? 0 : p - a; }
    E inv(E a) const {
        E r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    E div(E a, E b) const { return mul(a, inv(b)); }
    E from_scalar(const Scalar& s) const { return s.to_ring(ring_).fp_value(); }
    Scalar to_scalar(E e) const { return Scalar::fp(ring_, (long)e); }
};

struct FracF {
    RingPtr ring_;
    explicit FracF(RingPtr r) : ring_(std::move(r)) {}
    using E = Scalar;
    bool is_zero(const E& e) const { return e.is_zero(); }
    E one() const { return Scalar::constant(ring_, 1); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E div(const E& a, const E& b) const { return a.div_exact(b); }
    E neg(const E& a) const { return -a; }
    E from_scalar(const Scalar& s) const { return s.to_ring(ring_); }
    Scalar to_scalar(const E& e) const { return e; }
};

template <class F>
using Terms = std::vector<std::pair<Word, typename F::E>>;  // descending

/* merge b (descending) into a (descending) */
template <class F>
void merge_desc(const F& f, Terms<F>& a, Terms<F>&& b) {
    if (b.empty()) return;
    if (a.empty()) {
        a = std::move(b);
        return;
    }
    Terms<F> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            auto c = f.add(a[i].second, b[j].second);
            if (!f.is_zero(c)) out.push_back({std::move(a[i].first), std::move(c)});
            ++i, ++j;
        } else if (word_less(b[j].first, a[i].first)) {
            out.push_back(std::move(a[i++]));
        } else {
            out.push_back(std::move(b[j++]));
        }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    a = std::move(out);
}

/* geobucket accumulator: max-extraction over bucketed sorted streams */
template <class F>
struct Geobucket {
    const F& f;
    std::vector<Terms<F>> bk;  // each ascending (max at back)
    size_t live = 0;

    explicit Geobucket(const F& field) : f(field) {}

    static size_t cap(size_t i) { return (size_t)16 << (2 * i); }

    /* v is descending; reversed into a bucket */
    void add(Terms<F>&& v) {
        if (v.empty()) return;
        std::reverse(v.begin(), v.end());
        live += v.size();
        size_t i = 0;
        while (cap(i) < v.size()) ++i;
        while (true) {
            if (i >= bk.size()) bk.resize(i + 1);
            if (bk[i].empty()) {
                bk[i] = std::move(v);
                return;
            }
            merge_asc(bk[i], v);
            if (bk[i].size() <= cap(i)) return;
            v = std::move(bk[i]);
            bk[i].clear();
            ++i;
        }
    }

    void merge_asc(Terms<F>& a, Terms<F>& b) {
        Terms<F> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first == b[j].first) {
                auto c = f.add(a[i].second, b[j].second);
                if (!f.is_zero(c)) out.push_back({std::move(a[i].first), std::move(c)});
                ++i, ++j;
            } else if (word_less(a[i].first, b[j].first)) {
                out.push_back(std::move(a[i++]));
            } else {
                out.push_back(std::move(b[j++]));
            }
        }
        for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
        for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
        a = std::move(out);
    }

    bool pop_max(Word& w, typename F::E& c) {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < bk.size(); ++i) {
                if (bk[i].empty()) continue;
                if (best < 0 || word_less(bk[best].back().first, bk[i].back().first)) best = (int)i;
            }
            if (best < 0) return false;
            w = bk[best].back().first;
            c = bk[best].back().second;
            bk[best].pop_back();
            --live;
            for (size_t i = 0; i < bk.size(); ++i) {
                while (!bk[i].empty() && bk[i].back().first == w) {
                    c = f.add(c, bk[i].back().second);
                    bk[i].pop_back();
                    --live;
                }
            }
            if (!f.is_zero(c)) return true;
        }
    }
};

/* Aho-Corasick over the leading words; at most one pattern can end at any
 * text position because no leading word is a subword of another. */
struct Aho {
    int alphabet = 0;
    std::vector<int32_t> nxt;   // state*alphabet + letter
    std::vector<int32_t> fail;
    std::vector<int32_t> match;      // rule index ending at this state, -1
    std::vector<int32_t> match_len;  // its length

    void build(const std::vector<Word>& pats, const std::vector<int>& ids, int alpha) {
        alphabet = alpha;
        size_t total = 1;
        for (const auto& p : pats) total += p.size();
        nxt.assign(total * alpha, 0);
        fail.assign(total, 0);
        match.assign(total, -1);
        match_len.assign(total, 0);
        size_t states = 1;
        /* trie */
        for (size_t k = 0; k < pats.size(); ++k) {
            size_t s = 0;
            for (Letter c : pats[k]) {
                int32_t& t = nxt[s * alpha + c];
                if (t == 0) {
                    t = (int32_t)states++;
                }
                s = (size_t)t;
            }
            match[s] = ids[k];
            match_len[s] = (int32_t)pats[k].size();
        }
        /* BFS fail links + goto completion */
        std::vector<int32_t> queue;
        queue.reserve(states);
        for (int c = 0; c < alpha; ++c) {
            int32_t t = nxt[c];
            if (t) {
                fail[t] = 0;
                queue.push_back(t);
            }
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int32_t s = queue[qi];
            if (match[s] < 0 && match[fail[s]] >= 0) {
                match[s] = match[fail[s]];
                match_len[s] = match_len[fail[s]];
            }
            for (int c = 0; c < alpha; ++c) {
                int32_t t = nxt[s * alpha + c];
                if (t) {
                    fail[t] = nxt[fail[s] * alpha + c];
                    queue.push_back(t);
                } else {
                    nxt[s * alpha + c] = nxt[fail[s] * alpha + c];
                }
            }
        }
    }

    /* first (smallest end position) match in w; returns rule id or -1 */
    int find(const Word& w, uint32_t& pos) const {
        int32_t s = 0;
        for (size_t k = 0; k < w.size(); ++k) {
            s = nxt[s * alphabet + w[k]];
            if (match[s] >= 0) {
                pos = (uint32_t)(k + 1 - match_len[s]);
                return match[s];
            }
        }
        return -1;
    }
};

bool contains_subword(const Word& w, const Word& u) {
    if (u.empty()) return true;
    return w.find(u) != Word::npos;
}

}  // namespace

/* ---------------- type-erased basis ---------------- */

struct RewriteBasis::Base {
    Presentation pres;
    FieldDesc field;
    int complete_to_deg = 0;
    bool homog = true;
    bool margin_new = false;
    bool unit_ideal = false;
    size_t term_guard = 2000000;

    virtual ~Base() = default;
    virtual size_t rule_count() const = 0;
    virtual std::vector<Word> leading_words() const = 0;
    virtual NCPoly rule_poly(size_t idx) const = 0;
    virtual NCPoly normal_form(const NCPoly& e, ReductionLog* log) const = 0;
    virtual DimReport graded_dims(int K) const = 0;
    virtual DimReport filtered_dims(int K) const = 0;
    virtual DimReport subalgebra_dims(const std::vector<NCPoly>& gens, int K) const = 0;
    virtual std::vector<Word> standard_words(int degree, size_t cap) const = 0;
    virtual NCPoly replay(const NCPoly& input, const ReductionLog& log) const = 0;
    virtual bool verify_confluent() const = 0;
};

namespace {

template <class F>
struct BasisImpl : RewriteBasis::Base {
    F f;
    struct Rule {
        Word lw;
        Terms<F> tail;  // descending; ideal element is lw - tail
        bool alive = true;
    };
    std::vector<Rule> rules;
    std::vector<int> alive_ids;
    Aho aho;
    bool aho_dirty = true;
    int alpha = 0;
    std::vector<Letter> gen_letters;

    explicit BasisImpl(F field) : f(std::move(field)) {}

    /* -------- conversions -------- */

    Terms<F> to_terms(const NCPoly& e) const {
        Terms<F> t;
        t.reserve(e.terms.size());
        for (const auto& [w, c] : e.terms) {
            auto ec = f.from_scalar(c);
            if (!f.is_zero(ec)) t.push_back({w, std::move(ec)});
        }
        return t;
    }

    NCPoly from_terms(const Terms<F>& t) const {
        NCPoly p(field.ring(), pres.n);
        p.terms.reserve(t.size());
        for (const auto& [w, c] : t) p.terms.push_back({w, f.to_scalar(c)});
        return p;
    }

    /* scaled two-sided wrap of a rule tail: c * pre . tail . suf (descending) */
    Terms<F> wrap(const Terms<F>& tail, const Word& pre, const Word& suf,
                  const typename F::E& c) const {
        Terms<F> out;
        out.reserve(tail.size());
        for (const auto& [w, tc] : tail) {
            Word nw;
            nw.reserve(pre.size() + w.size() + suf.size());
            nw += pre;
            nw += w;
            nw += suf;
            out.push_back({std::move(nw), f.mul(c, tc)});
        }
        return out;
    }

    void ensure_aho() {
        if (!aho_dirty) return;
        std::vector<Word> pats;
        std::vector<int> ids;
        alive_ids.clear();
        for (size_t i = 0; i < rules.size(); ++i)
            if (rules[i].alive) {
                pats.push_back(rules[i].lw);
                ids.push_back((int)i);
                alive_ids.push_back((int)i);
            }
        aho.build(pats, ids, alpha);
        aho_dirty = false;
    }

    /* -------- reduction -------- */

    Terms<F> reduce(Terms<F> input, ReductionLog* log) {
        ensure_aho();
        Geobucket<F> gb(f);
        gb.add(std::move(input));
        Terms<F> out;
        Word w;
        typename F::E c;
        size_t work = 0;
        while (gb.pop_max(w, c)) {
            if (unit_ideal) continue;
            uint32_t pos = 0;
            int m = aho.find(w, pos);
            if (m < 0) {
                out.push_back({std::move(w), std::move(c)});
                continue;
            }
            if (log) log->steps.push_back({(uint32_t)m, pos});
            const Rule& r = rules[m];
            Word pre = w.substr(0, pos);
            Word suf = w.substr(pos + r.lw.size());
            gb.add(wrap(r.tail, pre, suf, c));
            if (++work > term_guard || gb.live > term_guard)
                throw guard_error("term-count guard exceeded during reduction");
        }
        return out;
    }

    /* const-access reduction for queries after completion */
    Terms<F> reduce_const(Terms<F> input, ReductionLog* log) const {
        return const_cast<BasisImpl*>(this)->reduce(std::move(input), log);
    }

    /* -------- completion -------- */

    struct PairKey {
        int deg;
        Word lw1, lw2;
        uint32_t pos;
        uint32_t r1, r2;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lw1 != o.lw1) return word_less(lw1, o.lw1);
            if (lw2 != o.lw2) return word_less(lw2, o.lw2);
            return pos < o.pos;
        }
    };
    std::set<PairKey> queue;
    std::vector<Terms<F>> pending;
    int bound = 0;
    int processing_deg = 0;

    void enqueue_overlaps(uint32_t i) {
        const Word& a = rules[i].lw;
        for (int j : alive_rule_ids()) {
            const Word& b = rules[j].lw;
            /* overlaps a-then-b and b-then-a */
            overlap_pair(i, (uint32_t)j, a, b);
            if ((uint32_t)j != i) overlap_pair((uint32_t)j, i, b, a);
        }
    }

    std::vector<int> alive_rule_ids() const {
        std::vector<int> ids;
        for (size_t i = 0; i < rules.size(); ++i)
            if (rules[i].alive) ids.push_back((int)i);
        return ids;
    }

    void overlap_pair(uint32_t i, uint32_t j, const Word& a, const Word& b) {
        size_t maxov = std::min(a.size(), b.size()) - 1;
        for (size_t ov = 1; ov <= maxov; ++ov) {
            if (a.compare(a.size() - ov, ov, b, 0, ov) != 0) continue;
            int deg = (int)(a.size() + b.size() - ov);
            if (deg > bound) continue;
            queue.insert(PairKey{deg, a, b, (uint32_t)(a.size() - ov), i, j});
        }
    }

    void add_rule_from(Terms<F> p) {
        if (p.empty()) return;
        if (p.front().first.empty()) {
            unit_ideal = true;
            return;
        }
        Rule r;
        r.lw = p.front().first;
        auto lead = p.front().second;
        r.tail.reserve(p.size() - 1);
        for (size_t k = 1; k < p.size(); ++k)
            r.tail.push_back({p[k].first, f.neg(f.div(p[k].second, lead))});
        uint32_t idx = (uint32_t)rules.size();
        /* interreduce: retire rules whose leading word contains the new one */
        for (size_t k = 0; k < rules.size(); ++k) {
            if (!rules[k].alive) continue;
            if (contains_subword(rules[k].lw, r.lw)) {
                rules[k].alive = false;
                Terms<F> back;
                back.push_back({rules[k].lw, f.one()});
                for (const auto& [w, c] : rules[k].tail) back.push_back({w, f.neg(c)});
                pending.push_back(std::move(back));
            }
        }
        rules.push_back(std::move(r));
        aho_dirty = true;
        enqueue_overlaps(idx);
        if (processing_deg > complete_to_deg) margin_new = true;
    }

    void drain_pending() {
        while (!pending.empty()) {
            Terms<F> p = std::move(pending.front());
            pending.erase(pending.begin());
            p = reduce(std::move(p), nullptr);
            add_rule_from(std::move(p));
        }
    }

    void run_complete(int D) {
        complete_to_deg = D;
        bound = homog ? D : D + 2;
        for (const auto& rel : pres.relations) pending.push_back(to_terms(rel));
        drain_pending();
        while (!queue.empty()) {
            PairKey k = *queue.begin();
            queue.erase(queue.begin());
            if (!rules[k.r1].alive || !rules[k.r2].alive) continue;
            processing_deg = k.deg;
            Terms<F> s = spoly(k);
            s = reduce(std::move(s), nullptr);
            if (!s.empty()) {
                add_rule_from(std::move(s));
                drain_pending();
            }
        }
        processing_deg = 0;
        /* final interreduction of tails */
        for (auto& r : rules) {
            if (!r.alive) continue;
            r.tail = reduce(std::move(r.tail), nullptr);
        }
        aho_dirty = true;
        ensure_aho();
    }

    Terms<F> spoly(const PairKey& k) const {
        const Rule& r1 = rules[k.r1];
        const Rule& r2 = rules[k.r2];
        size_t ov = r1.lw.size() - k.pos;
        Word pre = r1.lw.substr(0, k.pos);
        Word suf = r2.lw.substr(ov);
        Terms<F> s = wrap(r1.tail, Word(), suf, f.one());
        Terms<F> t = wrap(r2.tail, pre, Word(), f.neg(f.one()));
        Geobucket<F> gb(f);
        gb.add(std::move(s));
        gb.add(std::move(t));
        Terms<F> out;
        Word w;
        typename F::E c;
        while (gb.pop_max(w, c)) out.push_back({std::move(w), std::move(c)});
        return out;
    }

    /* -------- virtual interface -------- */

    size_t rule_count() const override {
        size_t c = 0;
        for (const auto& r : rules)
            if (r.alive) ++c;
        return c;
    }

    std::vector<Word> leading_words() const override {
        std::vector<Word> ws;
        for (const auto& r : rules)
            if (r.alive) ws.push_back(r.lw);
        std::sort(ws.begin(), ws.end(), word_less);
        return ws;
    }

    NCPoly rule_poly(size_t idx) const override {
        size_t seen = 0;
        for (const auto& r : rules) {
            if (!r.alive) continue;
            if (seen++ == idx) {
                Terms<F> p;
                p.push_back({r.lw, f.one()});
                for (const auto& [w, c] : r.tail) p.push_back({w, f.neg(c)});
                return from_terms(p);
            }
        }
        throw usage_error("rule index out of range");
    }

    NCPoly normal_form(const NCPoly& e, ReductionLog* log) const override {
        if (e.degree() > complete_to_deg)
            throw guard_error("element degree exceeds completion degree");
        return from_terms(reduce_const(to_terms(e), log));
    }

    DimReport graded_dims(int K) const override {
        if (!homog) throw usage_error("graded dims require a homogeneous presentation");
        const_cast<BasisImpl*>(this)->ensure_aho();
        DimReport rep;
        rep.field = field;
        rep.dims.assign(K + 1, 0);
        if (unit_ideal) return rep;
        size_t states = aho.fail.size();
        std::vector<mpz_class> cnt(states, 0), nxt_cnt(states);
        cnt[0] = 1;
        rep.dims[0] = 1;
        for (int d = 1; d <= K; ++d) {
            for (auto& c : nxt_cnt) c = 0;
            for (size_t s = 0; s < states; ++s) {
                if (cnt[s] == 0) continue;
                for (Letter l : gen_letters) {
                    int32_t t = aho.nxt[s * aho.alphabet + l];
                    if (aho.match[t] >= 0) continue;
                    nxt_cnt[t] += cnt[s];
                }
            }
            std::swap(cnt, nxt_cnt);
            mpz_class total = 0;
            for (const auto& c : cnt) total += c;
            rep.dims[d] = total;
        }
        return rep;
    }

    /* incremental span of normal forms: F_k = F_{k-1} + sum_g g * F_{k-1} */
    DimReport span_dims(const std::vector<std::pair<Word, NCPoly>>& gens, int K,
                        bool words_mode) const {
        DimReport rep;
        rep.field = field;
        rep.filtered = true;
        auto* self = const_cast<BasisImpl*>(this);
        self->ensure_aho();

        std::map<Word, size_t> pivots;
        std::vector<Terms<F>> rows;
        auto insert = [&](Terms<F> cand) -> bool {
            while (!cand.empty()) {
                auto it = pivots.find(cand.front().first);
                if (it == pivots.end()) {
                    auto lead = cand.front().second;
                    for (auto& [w, c] : cand) c = f.div(c, lead);
                    pivots.emplace(cand.front().first, rows.size());
                    rows.push_back(std::move(cand));
                    return true;
                }
                auto c = f.neg(cand.front().second);
                merge_desc(f, cand, wrap(rows[it->second], Word(), Word(), c));
            }
            return false;
        };

        std::vector<size_t> layer;  // rows added in the previous layer
        Terms<F> unit;
        unit.push_back({Word(), f.one()});
        unit = self->reduce(std::move(unit), nullptr);
        size_t rank = 0;
        if (!unit.empty() && insert(std::move(unit))) layer.push_back(rows.size() - 1);
        rep.dims.push_back((long)(rows.size() - rank));
        rank = rows.size();

        std::vector<Terms<F>> gen_terms;
        for (const auto& [w, p] : gens) {
            if (words_mode) {
                Terms<F> t;
                t.push_back({w, f.one()});
                gen_terms.push_back(std::move(t));
            } else {
                gen_terms.push_back(to_terms(p));
            }
        }

        for (int d = 1; d <= K; ++d) {
            std::vector<size_t> next_layer;
            for (size_t ri : layer) {
                Terms<F> base = rows[ri];
                for (const auto& g : gen_terms) {
                    /* g * base, reduced */
                    Geobucket<F> gb(f);
                    for (const auto& [gw, gc] : g) gb.add(wrap(base, gw, Word(), gc));
                    Terms<F> prod;
                    Word w;
                    typename F::E c;
                    while (gb.pop_max(w, c)) prod.push_back({std::move(w), std::move(c)});
                    prod = self->reduce(std::move(prod), nullptr);
                    if (!prod.empty() && insert(std::move(prod)))
                        next_layer.push_back(rows.size() - 1);
                }
            }
            rep.dims.push_back((long)(rows.size() - rank));
            rank = rows.size();
            layer = std::move(next_layer);
        }
        return rep;
    }

    DimReport filtered_dims(int K) const override {
        if (K > complete_to_deg) throw usage_error("degree exceeds completion degree");
        std::vector<std::pair<Word, NCPoly>> gens;
        for (Letter l : gen_letters) gens.push_back({Word(1, l), NCPoly()});
        return span_dims(gens, K, true);
    }

    DimReport subalgebra_dims(const std::vector<NCPoly>& gens, int K) const override {
        if (K > complete_to_deg) throw usage_error("degree exceeds completion degree");
        std::vector<std::pair<Word, NCPoly>> gs;
        for (const auto& g : gens) {
            if (g.is_zero() || g.degree() != 1 || !g.homogeneous())
                throw usage_error("subalgebra generators must be homogeneous of degree 1");
            gs.push_back({Word(), g});
        }
        return span_dims(gs, K, false);
    }

    std::vector<Word> standard_words(int degree, size_t cap) const override {
        const_cast<BasisImpl*>(this)->ensure_aho();
        std::vector<Word> out;
        Word cur;
        struct Frame {
            int32_t state;
            size_t next_gen;
        };
        std::vector<Frame> stack{{0, 0}};
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if ((int)cur.size() == degree) {
                out.push_back(cur);
                if (out.size() >= cap) return out;
                cur.pop_back();
                stack.pop_back();
                continue;
            }
            if (fr.next_gen >= gen_letters.size()) {
                if (!cur.empty()) cur.pop_back();
                stack.pop_back();
                continue;
            }
            Letter l = gen_letters[fr.next_gen++];
            int32_t t = aho.nxt[fr.state * aho.alphabet + l];
            if (aho.match[t] >= 0) continue;
            cur.push_back(l);
            stack.push_back({t, 0});
        }
        return out;
    }

    NCPoly replay(const NCPoly& input, const ReductionLog& log) const override {
        /* step-by-step re-derivation: each logged step is verified to apply
         * at the recorded position of the current maximal word; words the
         * next step does not touch are emitted as normal-form terms.  The
         * caller compares the result against the recorded normal form. */
        Geobucket<F> gb(f);
        gb.add(to_terms(input));
        Terms<F> done;
        Word w;
        typename F::E c;
        size_t li = 0;
        while (gb.pop_max(w, c)) {
            if (unit_ideal) continue;
            bool applied = false;
            if (li < log.steps.size()) {
                const auto& st = log.steps[li];
                if (st.rule < rules.size()) {
                    const Rule& r = rules[st.rule];
                    if (st.pos + r.lw.size() <= w.size() &&
                        w.compare(st.pos, r.lw.size(), r.lw) == 0) {
                        gb.add(wrap(r.tail, w.substr(0, st.pos), w.substr(st.pos + r.lw.size()), c));
                        ++li;
                        applied = true;
                    }
                }
            }
            if (!applied) done.push_back({std::move(w), std::move(c)});
        }
        if (li != log.steps.size()) throw usage_error("reduction log has unused steps");
        return from_terms(done);
    }

    bool verify_confluent() const override {
        auto* self = const_cast<BasisImpl*>(this);
        self->ensure_aho();
        auto ids = alive_rule_ids();
        for (int i : ids)
            for (int j : ids) {
                const Word& a = rules[i].lw;
                const Word& b = rules[j].lw;
                size_t maxov = std::min(a.size(), b.size()) - 1;
                for (size_t ov = 1; ov <= maxov; ++ov) {
                    if (a.compare(a.size() - ov, ov, b, 0, ov) != 0) continue;
                    if ((int)(a.size() + b.size() - ov) > complete_to_deg) continue;
                    PairKey k{(int)(a.size() + b.size() - ov), a, b, (uint32_t)(a.size() - ov),
                              (uint32_t)i, (uint32_t)j};
                    Terms<F> s = spoly(k);
                    s = self->reduce(std::move(s), nullptr);
                    if (!s.empty()) return false;
                }
            }
        return true;
    }
};

template <class F>
std::shared_ptr<const RewriteBasis::Base> make_basis(F field, const Presentation& p, int D,
                                                     const FieldDesc& fd,
                                                     const CompleteOptions& opts) {
    auto impl = std::make_shared<BasisImpl<F>>(std::move(field));
    impl->pres = p;
    impl->field = fd;
    impl->homog = p.homogeneous;
    impl->term_guard = opts.term_guard;
    impl->alpha = bracket_count(p.n) + p.n;
    impl->gen_letters = p.letters();
    impl->run_complete(D);
    return impl;
}

}  // namespace

RewriteBasis RewriteBasis::complete(const Presentation& p, int degree, const FieldDesc& field,
                                    const CompleteOptions& opts) {
    if (degree < 2) throw usage_error("completion degree must be >= 2");
    RewriteBasis rb;
    switch (field.kind) {
        case FieldDesc::Kind::Q: rb.impl_ = make_basis(QF{}, p, degree, field, opts); break;
        case FieldDesc::Kind::Fp: rb.impl_ = make_basis(FpF(field.p), p, degree, field, opts); break;
        case FieldDesc::Kind::Frac:
            rb.impl_ = make_basis(FracF(field.ring()), p, degree, field, opts);
            break;
    }
    return rb;
}

const Presentation& RewriteBasis::presentation() const { return impl_->pres; }
const FieldDesc& RewriteBasis::field() const { return impl_->field; }
int RewriteBasis::complete_to() const { return impl_->complete_to_deg; }
bool RewriteBasis::homogeneous() const { return impl_->homog; }
bool RewriteBasis::margin_new_rules() const { return impl_->margin_new; }
size_t RewriteBasis::rule_count() const { return impl_->rule_count(); }
std::vector<Word> RewriteBasis::leading_words() const { return impl_->leading_words(); }
NCPoly RewriteBasis::rule_poly(size_t idx) const { return impl_->rule_poly(idx); }

NCPoly RewriteBasis::normal_form(const NCPoly& e, ReductionLog* log) const {
    return impl_->normal_form(e, log);
}

Verdict RewriteBasis::check_zero(const NCPoly& e) const {
    NCPoly nf = impl_->normal_form(e, nullptr);
    if (nf.is_zero()) return Verdict::ProvedZero;
    if (e.degree() <= impl_->complete_to_deg) return Verdict::NonzeroWitness;
    return Verdict::Inconclusive;
}

DimReport RewriteBasis::graded_dims(int K) const {
    if (K > impl_->complete_to_deg) throw usage_error("degree exceeds completion degree");
    return impl_->graded_dims(K);
}

mpz_class RewriteBasis::graded_dim(int degree) const { return graded_dims(degree).dims[degree]; }

DimReport RewriteBasis::filtered_dims(int K) const { return impl_->filtered_dims(K); }

DimReport RewriteBasis::subalgebra_dims(const std::vector<NCPoly>& gens, int K) const {
    return impl_->subalgebra_dims(gens, K);
}

std::vector<Word> RewriteBasis::standard_words(int degree, size_t cap) const {
    return impl_->standard_words(degree, cap);
}

NCPoly RewriteBasis::replay(const NCPoly& input, const ReductionLog& log) const {
    return impl_->replay(input, log);
}

bool RewriteBasis::verify_confluent() const { return impl_->verify_confluent(); }

std::vector<long> DimReport::dims_long() const {
    std::vector<long> v;
    v.reserve(dims.size());
    for (const auto& d : dims) v.push_back((long)d.get_si());
    return v;
}

/* ---------------- independent rank oracle ---------------- */

namespace {

template <class F>
void sort_row(Terms<F>& row, const F& f) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return word_less(y.first, x.first); });
    Terms<F> out;
    for (auto& t : row) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = f.add(out.back().second, t.second);
        else
            out.push_back(std::move(t));
        if (!out.empty() && f.is_zero(out.back().second)) out.pop_back();
    }
    row = std::move(out);
}

template <class F>
mpz_class oracle_dim_impl(F f, const Presentation& p, int degree) {
    auto letters = p.letters();
    /* pivot elimination over raw placements u * r * w */
    std::map<Word, size_t> pivots;
    std::vector<Terms<F>> rows;
    auto insert = [&](Terms<F> cand) {
        while (!cand.empty()) {
            auto it = pivots.find(cand.front().first);
            if (it == pivots.end()) {
                auto lead = cand.front().second;
                for (auto& [w, c] : cand) c = f.div(c, lead);
                pivots.emplace(cand.front().first, rows.size());
                rows.push_back(std::move(cand));
                return;
            }
            auto c = f.neg(cand.front().second);
            const auto& row = rows[it->second];
            Terms<F> sub;
            sub.reserve(row.size());
            for (const auto& [w, rc] : row) sub.push_back({w, f.mul(c, rc)});
            merge_desc(f, cand, std::move(sub));
        }
    };

    std::map<int, std::vector<Word>> word_cache;
    auto enum_words = [&](int len) -> const std::vector<Word>& {
        auto it = word_cache.find(len);
        if (it != word_cache.end()) return it->second;
        std::vector<Word> out;
        out.push_back(Word());
        for (int d = 0; d < len; ++d) {
            std::vector<Word> nxt;
            nxt.reserve(out.size() * letters.size());
            for (const auto& w : out)
                for (Letter l : letters) {
                    Word t = w;
                    t.push_back(l);
                    nxt.push_back(std::move(t));
                }
            out = std::move(nxt);
        }
        return word_cache.emplace(len, std::move(out)).first->second;
    };

    for (const auto& rel : p.relations) {
        int d = rel.degree();
        if (!rel.homogeneous()) throw usage_error("rank oracle requires homogeneous relations");
        if (d > degree) continue;
        Terms<F> base;
        for (const auto& [w, c] : rel.terms) base.push_back({w, f.from_scalar(c)});
        for (int a = 0; a + d <= degree; ++a) {
            int b = degree - d - a;
            const auto& us = enum_words(a);
            const auto& ws = enum_words(b);
            for (const auto& u : us)
                for (const auto& w : ws) {
                    Terms<F> row;
                    row.reserve(base.size());
                    for (const auto& [bw, bc] : base) {
                        Word nw;
                        nw.reserve(u.size() + bw.size() + w.size());
                        nw += u;
                        nw += bw;
                        nw += w;
                        row.push_back({std::move(nw), bc});
                    }
                    sort_row(row, f);
                    insert(std::move(row));
                }
        }
    }
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), letters.size(), degree);
    return total - (long)rows.size();
}

}  // namespace

mpz_class oracle_graded_dim(const Presentation& p, int degree, const FieldDesc& field) {
    switch (field.kind) {
        case FieldDesc::Kind::Q: return oracle_dim_impl(QF{}, p, degree);
        case FieldDesc::Kind::Fp: return oracle_dim_impl(FpF(field.p), p, degree);
        case FieldDesc::Kind::Frac: return oracle_dim_impl(FracF(field.ring()), p, degree);
    }
    throw usage_error("bad field");
}

TorsionReport torsion_probe(const Presentation& p, int max_degree,
                            const std::vector<uint64_t>& primes) {
    if (!p.homogeneous) throw usage_error("torsion probe requires a homogeneous presentation");
    TorsionReport rep;
    rep.primes = primes;
    RewriteBasis rbq = RewriteBasis::complete(p, max_degree, FieldDesc::rationals());
    rep.dims_q = rbq.graded_dims(max_degree).dims;
    for (uint64_t prime : primes) {
        RewriteBasis rb = RewriteBasis::complete(p, max_degree, FieldDesc::prime(prime));
        rep.dims_fp.push_back(rb.graded_dims(max_degree).dims);
        for (int d = 0; d <= max_degree; ++d)
            if (rep.dims_fp.back()[d] != rep.dims_q[d]) rep.flags.push_back({prime, d});
    }
    return rep;
}

}  // namespace qalg

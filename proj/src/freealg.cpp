#include "freealg.hpp"

#include <algorithm>
#include <cctype>

namespace qalg {

GenSym GenSym::bracket(int i, int j) {
    if (!(1 <= i && i < j)) throw usage_error("bracket generator requires i < j");
    GenSym g;
    g.is_var = false;
    g.i = (uint8_t)i;
    g.j = (uint8_t)j;
    return g;
}

GenSym GenSym::var(int i) {
    if (i < 1) throw usage_error("variable index must be positive");
    GenSym g;
    g.is_var = true;
    g.i = (uint8_t)i;
    return g;
}

std::string GenSym::str() const {
    if (is_var) return "x_" + std::to_string(i);
    return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

int bracket_count(int n) { return n * (n - 1) / 2; }

Letter letter_of(const GenSym& g, int n) {
    if (g.is_var) {
        if (g.i > n) throw usage_error("variable index out of rank");
        return (Letter)(bracket_count(n) + g.i - 1);
    }
    if (g.j > n) throw usage_error("bracket index out of rank");
    return (Letter)((g.j - 1) * (g.j - 2) / 2 + g.i - 1);
}

GenSym sym_of(Letter code, int n) {
    int nb = bracket_count(n);
    if (code >= nb) return GenSym::var(code - nb + 1);
    int j = 2;
    while ((j) * (j - 1) / 2 <= code) ++j;
    int i = code - (j - 1) * (j - 2) / 2 + 1;
    return GenSym::bracket(i, j);
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    /* equal degree: lexicographic scanning from the right, so variables
     * straighten leftward and columns settle rightward */
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::string word_str(const Word& w, int n) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += "*";
        s += sym_of(w[k], n).str();
    }
    return s;
}

void sort_terms(std::vector<std::pair<Word, Scalar>>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return word_less(y.first, x.first); });
    std::vector<std::pair<Word, Scalar>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = out.back().second + t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms = std::move(out);
}

void add_term(std::vector<std::pair<Word, Scalar>>& terms, const Word& w, const Scalar& c) {
    terms.push_back({w, c});
}

NCPoly NCPoly::one(RingPtr r, int n) {
    NCPoly p(r, n);
    p.terms.push_back({Word(), Scalar::constant(r, 1)});
    return p;
}

NCPoly NCPoly::monomial(RingPtr r, int n, const Word& w, const Scalar& c) {
    NCPoly p(std::move(r), n);
    if (!c.is_zero()) p.terms.push_back({w, c});
    return p;
}

NCPoly NCPoly::gen(RingPtr r, int n, const GenSym& g) {
    Word w(1, letter_of(g, n));
    return monomial(std::move(r), n, w, Scalar::constant(r, 1));
}

bool NCPoly::homogeneous() const {
    for (const auto& t : terms)
        if ((int)t.first.size() != degree()) return false;
    return true;
}

static void check_compat(const NCPoly& a, const NCPoly& b) {
    if (a.n != b.n) throw usage_error("rank mismatch");
    if (!(a.ring == b.ring || *a.ring == *b.ring)) throw usage_error("ring mismatch");
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    check_compat(*this, o);
    NCPoly r(ring, n);
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        if (terms[i].first == o.terms[j].first) {
            Scalar c = terms[i].second + o.terms[j].second;
            if (!c.is_zero()) r.terms.push_back({terms[i].first, std::move(c)});
            ++i, ++j;
        } else if (word_less(o.terms[j].first, terms[i].first)) {
            r.terms.push_back(terms[i++]);
        } else {
            r.terms.push_back(o.terms[j++]);
        }
    }
    for (; i < terms.size(); ++i) r.terms.push_back(terms[i]);
    for (; j < o.terms.size(); ++j) r.terms.push_back(o.terms[j]);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(*this);
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const { return nc_mul(*this, o); }

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r(ring, n);
    if (c.is_zero()) return r;
    r.terms = terms;
    for (auto& t : r.terms) t.second = t.second * c;
    return r;
}

NCPoly NCPoly::to_ring(RingPtr target) const {
    NCPoly r(target, n);
    r.terms.reserve(terms.size());
    for (const auto& t : terms) {
        Scalar c = t.second.to_ring(target);
        if (!c.is_zero()) r.terms.push_back({t.first, std::move(c)});
    }
    /* conversion into Fp can kill terms but never reorders */
    return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
    if (n != o.n || terms.size() != o.terms.size()) return false;
    for (size_t k = 0; k < terms.size(); ++k)
        if (terms[k].first != o.terms[k].first || !(terms[k].second == o.terms[k].second))
            return false;
    return true;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
    check_compat(a, b);
    NCPoly r(a.ring, a.n);
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Word w = ta.first;
            w += tb.first;
            r.terms.push_back({std::move(w), ta.second * tb.second});
        }
    sort_terms(r.terms);
    return r;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return nc_mul(a, b) - nc_mul(b, a); }

NCPoly relabel(const NCPoly& p, const std::vector<int>& w, BracketConvention conv) {
    if ((int)w.size() != p.n) throw usage_error("permutation size must equal rank");
    /* relabel the pair parameters of the coefficient ring, if any */
    std::map<Param, Scalar> bind;
    if (p.ring->kind == Ring::Kind::Poly || p.ring->kind == Ring::Kind::Frac) {
        for (const Param& pm : p.ring->params) {
            if (pm.kind != Param::Kind::Tij) continue;
            int a = w[pm.i - 1], b = w[pm.j - 1];
            bind.emplace(pm, Scalar::param(p.ring, Param::tij(std::min(a, b), std::max(a, b))));
        }
    }
    NCPoly r(p.ring, p.n);
    r.terms.reserve(p.terms.size());
    for (const auto& [word, c] : p.terms) {
        Word out;
        out.reserve(word.size());
        int sign = 1;
        for (Letter l : word) {
            GenSym g = sym_of(l, p.n);
            if (g.is_var) throw usage_error("relabel applies to bracket letters only");
            int a = w[g.i - 1], b = w[g.j - 1];
            if (a > b && conv == BracketConvention::Antisymmetric) sign = -sign;
            out.push_back(letter_of(GenSym::bracket(std::min(a, b), std::max(a, b)), p.n));
        }
        Scalar c2 = bind.empty() ? c : c.evaluate(bind, p.ring);
        if (sign < 0) c2 = -c2;
        if (!c2.is_zero()) r.terms.push_back({std::move(out), std::move(c2)});
    }
    sort_terms(r.terms);
    return r;
}

/* ---------------- element parser ---------------- */

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw usage_error("parse error at offset " + std::to_string(pos) + ": " + what);
    }
    long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        return s.substr(start, pos - start);
    }
};

struct ElemParser {
    Lexer lx;
    RingPtr ring;
    int n;
    ElemParser(const std::string& text, RingPtr r, int rank) : lx(text), ring(std::move(r)), n(rank) {}

    NCPoly parse() {
        NCPoly e = expr();
        lx.skip();
        if (lx.pos != lx.s.size()) lx.fail("trailing input");
        return e;
    }

    NCPoly expr() {
        NCPoly acc = NCPoly::zero(ring, n);
        bool neg = lx.eat('-');
        if (!neg) lx.eat('+');
        acc = acc + (neg ? -term() : term());
        while (true) {
            if (lx.eat('+'))
                acc = acc + term();
            else if (lx.eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    NCPoly term() {
        NCPoly acc = factor();
        while (true) {
            char c = lx.peek();
            if (c == '*') {
                lx.eat('*');
                acc = acc * factor();
            } else if (c == '[' || c == 'x' || c == '(') {
                /* juxtaposition, e.g. "3t" style coefficients or 2[1,2] */
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    NCPoly power(NCPoly base) {
        if (lx.eat('^')) {
            long e = lx.integer();
            if (e < 0) lx.fail("negative word power");
            NCPoly r = NCPoly::one(ring, n);
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    NCPoly factor() {
        char c = lx.peek();
        if (c == '(') {
            lx.eat('(');
            NCPoly e = expr();
            if (!lx.eat(')')) lx.fail("expected )");
            return power(std::move(e));
        }
        if (c == '[') {
            lx.eat('[');
            long i = lx.integer();
            if (!lx.eat(',')) lx.fail("expected , in bracket");
            long j = lx.integer();
            if (!lx.eat(']')) lx.fail("expected ]");
            if (!(1 <= i && i < j && j <= n)) lx.fail("bracket indices out of range (need i<j<=n)");
            return power(NCPoly::gen(ring, n, GenSym::bracket((int)i, (int)j)));
        }
        if (isdigit((unsigned char)c)) {
            long v = lx.integer();
            return power(NCPoly::monomial(ring, n, Word(), Scalar::constant(ring, v)));
        }
        if (isalpha((unsigned char)c)) {
            std::string id = lx.ident();
            if (id == "x" || (id.size() >= 2 && id[0] == 'x' && id[1] == '_')) {
                long i;
                if (id == "x") {
                    if (!lx.eat('_')) lx.fail("expected _ after x");
                    i = lx.integer();
                } else {
                    i = std::stol(id.substr(2));
                }
                if (!(1 <= i && i <= n)) lx.fail("variable index out of range");
                return power(NCPoly::gen(ring, n, GenSym::var((int)i)));
            }
            auto pm = Param::parse(id);
            if (!pm) lx.fail("unknown symbol '" + id + "'");
            long e = 1;
            NCPoly base = NCPoly::monomial(ring, n, Word(), Scalar::param(ring, *pm));
            if (lx.eat('^')) {
                e = lx.integer();
                base = NCPoly::monomial(ring, n, Word(), Scalar::param(ring, *pm, (int)e));
            }
            return base;
        }
        lx.fail("unexpected character");
    }
};

}  // namespace

NCPoly parse_element(const std::string& text, RingPtr ring, int n) {
    ElemParser p(text, std::move(ring), n);
    return p.parse();
}

std::string NCPoly::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
        std::string cs = c.str();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        bool composite = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos;
        if (first) {
            if (negated) s += "-";
            first = false;
        } else {
            s += negated ? " - " : " + ";
        }
        std::string ws = word_str(w, n);
        if (w.empty()) {
            s += composite ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            s += ws;
        } else {
            s += (composite ? "(" + cs + ")" : cs) + "*" + ws;
        }
    }
    return s;
}

}  // namespace qalg

#include "qops.hpp"

#include <algorithm>
#include <cctype>

namespace qalg {

static bool exps_less(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void XPoly::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return exps_less(y.first, x.first); });
    std::vector<std::pair<std::vector<int32_t>, Scalar>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = out.back().second + t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms = std::move(out);
}

XPoly XPoly::one(RingPtr r, int n) {
    XPoly p(r, n);
    p.terms.push_back({std::vector<int32_t>(n, 0), Scalar::constant(r, 1)});
    return p;
}

XPoly XPoly::var(RingPtr r, int n, int i) {
    if (!(1 <= i && i <= n)) throw usage_error("variable index out of range");
    XPoly p(r, n);
    std::vector<int32_t> e(n, 0);
    e[i - 1] = 1;
    p.terms.push_back({std::move(e), Scalar::constant(r, 1)});
    return p;
}

XPoly XPoly::monomial(RingPtr r, int n, const std::vector<int32_t>& e, const Scalar& c) {
    XPoly p(std::move(r), n);
    if (!c.is_zero()) p.terms.push_back({e, c});
    return p;
}

int XPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r(ring, n);
    r.terms = terms;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    r.normalize();
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator*(const XPoly& o) const {
    XPoly r(ring, n);
    r.terms.reserve(terms.size() * o.terms.size());
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            std::vector<int32_t> e = ea;
            for (int k = 0; k < n; ++k) e[k] += eb[k];
            r.terms.push_back({std::move(e), ca * cb});
        }
    r.normalize();
    return r;
}

XPoly XPoly::scaled(const Scalar& c) const {
    XPoly r(ring, n);
    if (c.is_zero()) return r;
    r.terms = terms;
    for (auto& t : r.terms) t.second = t.second * c;
    return r;
}

XPoly XPoly::div_exact(const XPoly& d) const {
    if (d.is_zero()) throw usage_error("division by zero polynomial");
    XPoly rem = *this;
    XPoly out(ring, n);
    const auto& dl = d.terms.front();
    while (!rem.is_zero()) {
        const auto& rl = rem.terms.front();
        std::vector<int32_t> e(n);
        bool divisible = true;
        for (int k = 0; k < n; ++k) {
            e[k] = rl.first[k] - dl.first[k];
            if (e[k] < 0) divisible = false;
        }
        if (!divisible)
            throw usage_error("inexact polynomial division (operator applied outside domain)");
        XPoly q = XPoly::monomial(ring, n, e, rl.second.div_exact(dl.second));
        out = out + q;
        rem = rem - q * d;
    }
    return out;
}

bool XPoly::operator==(const XPoly& o) const {
    if (n != o.n || terms.size() != o.terms.size()) return false;
    for (size_t k = 0; k < terms.size(); ++k)
        if (terms[k].first != o.terms[k].first || !(terms[k].second == o.terms[k].second))
            return false;
    return true;
}

std::string XPoly::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) s += " + ";
        first = false;
        std::string mono;
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x_" + std::to_string(k + 1);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        std::string cs = c.str();
        if (mono.empty())
            s += "(" + cs + ")";
        else if (cs == "1")
            s += mono;
        else
            s += "(" + cs + ")*" + mono;
    }
    return s;
}

/* ---------------- operators ---------------- */

PolyOperator op_identity() {
    return {[](const XPoly& f) { return f; }, 0};
}

PolyOperator op_compose(PolyOperator a, PolyOperator b) {
    int shift = a.deg_shift + b.deg_shift;
    return {[a = std::move(a), b = std::move(b)](const XPoly& f) { return a(b(f)); }, shift};
}

PolyOperator op_add(PolyOperator a, PolyOperator b) {
    int shift = std::max(a.deg_shift, b.deg_shift);
    return {[a = std::move(a), b = std::move(b)](const XPoly& f) { return a(f) + b(f); }, shift};
}

PolyOperator op_scale(PolyOperator a, Scalar c) {
    return {[a = std::move(a), c = std::move(c)](const XPoly& f) { return a(f).scaled(c); },
            a.deg_shift};
}

PolyOperator op_mul_by(XPoly m) {
    int shift = m.total_degree();
    return {[m = std::move(m)](const XPoly& f) { return m * f; }, shift};
}

/* monomial substitution x_i -> coeff * x_{target} */
struct Subst {
    std::vector<int> target;     // 0-based target per variable
    std::vector<Scalar> coeff;   // multiplier per variable
};

static PolyOperator op_subst(RingPtr r, int n, Subst sub) {
    return {[r, n, sub = std::move(sub)](const XPoly& f) {
                XPoly out(f.ring, n);
                for (const auto& [e, c] : f.terms) {
                    std::vector<int32_t> e2(n, 0);
                    Scalar c2 = c;
                    for (int k = 0; k < n; ++k) {
                        if (e[k] == 0) continue;
                        e2[sub.target[k]] += e[k];
                        if (!sub.coeff[k].is_one()) c2 = c2 * sub.coeff[k].pow(e[k]);
                    }
                    out.terms.push_back({std::move(e2), std::move(c2)});
                }
                out.normalize();
                return out;
            },
            0};
}

PolyOperator op_sij(RingPtr r, int n, int i, int j) {
    Subst s;
    for (int k = 0; k < n; ++k) {
        s.target.push_back(k);
        s.coeff.push_back(Scalar::constant(r, 1));
    }
    s.target[i - 1] = j - 1;
    s.target[j - 1] = i - 1;
    return op_subst(r, n, std::move(s));
}

PolyOperator op_s0(RingPtr r, int n) {
    Subst s;
    for (int k = 0; k < n; ++k) {
        s.target.push_back(k);
        s.coeff.push_back(Scalar::constant(r, 1));
    }
    s.target[0] = n - 1;
    s.coeff[0] = Scalar::param(r, Param::q());
    s.target[n - 1] = 0;
    s.coeff[n - 1] = Scalar::param(r, Param::q(), -1);
    return op_subst(r, n, std::move(s));
}

PolyOperator op_tau(RingPtr r, int n, int i) {
    Subst s;
    for (int k = 0; k < n; ++k) {
        s.target.push_back(k);
        s.coeff.push_back(Scalar::constant(r, 1));
    }
    s.coeff[i - 1] = Scalar::param(r, Param::q());
    return op_subst(r, n, std::move(s));
}

PolyOperator op_w(RingPtr r, int n) {
    Subst s;
    for (int k = 0; k < n; ++k) {
        s.target.push_back(k == 0 ? n - 1 : k - 1);
        s.coeff.push_back(Scalar::constant(r, 1));
    }
    s.coeff[0] = Scalar::param(r, Param::q());
    return op_subst(r, n, std::move(s));
}

PolyOperator op_dd(RingPtr r, int n, int i, int j) {
    PolyOperator sij = op_sij(r, n, i, j);
    XPoly den = XPoly::var(r, n, i) - XPoly::var(r, n, j);
    return {[sij, den](const XPoly& f) { return (f - sij(f)).div_exact(den); }, -1};
}

PolyOperator op_euler(RingPtr r, int n, int j) {
    return {[n, j](const XPoly& f) {
                XPoly out(f.ring, n);
                for (const auto& [e, c] : f.terms) {
                    if (e[j - 1] == 0) continue;
                    out.terms.push_back({e, c * Scalar::constant(f.ring, e[j - 1])});
                }
                out.normalize();
                return out;
            },
            0};
}

PolyOperator op_Tij(RingPtr r, int n, int i, int j) {
    Scalar t = Scalar::param(r, Param::t());
    PolyOperator sij = op_sij(r, n, i, j);
    XPoly num = XPoly::var(r, n, j) - XPoly::var(r, n, i).scaled(t);
    XPoly den = XPoly::var(r, n, j) - XPoly::var(r, n, i);
    return {[t, sij, num, den](const XPoly& f) {
                XPoly diff = sij(f) - f;
                return f.scaled(t) + num * diff.div_exact(den);
            },
            0};
}

PolyOperator op_T(RingPtr r, int n, int a) {
    if (a == 0) {
        Scalar t = Scalar::param(r, Param::t());
        Scalar q = Scalar::param(r, Param::q());
        PolyOperator s0 = op_s0(r, n);
        XPoly num = XPoly::var(r, n, 1) - XPoly::var(r, n, n).scaled(t * q);
        XPoly den = XPoly::var(r, n, 1) - XPoly::var(r, n, n).scaled(q);
        return {[t, s0, num, den](const XPoly& f) {
                    XPoly diff = s0(f) - f;
                    return f.scaled(t) + num * diff.div_exact(den);
                },
                0};
    }
    if (!(1 <= a && a < n)) throw usage_error("T index out of range");
    return op_Tij(r, n, a, a + 1);
}

/* X^{-1} = t^{-1} X + (t^{-1} - 1) for X satisfying X^2 = (t-1)X + t */
static PolyOperator quad_inverse(RingPtr r, PolyOperator X) {
    Scalar tinv = Scalar::param(r, Param::t(), -1);
    Scalar c = tinv - Scalar::constant(r, 1);
    return op_add(op_scale(std::move(X), tinv), op_scale(op_identity(), c));
}

PolyOperator op_Tinv(RingPtr r, int n, int a) { return quad_inverse(r, op_T(r, n, a)); }

PolyOperator op_Tij_inv(RingPtr r, int n, int i, int j) {
    return quad_inverse(r, op_Tij(r, n, i, j));
}

PolyOperator op_Tbar(RingPtr r, int n, int i, int j) {
    Scalar u = Scalar::constant(r, 1) - Scalar::param(r, Param::t(), -1);
    PolyOperator dd = op_dd(r, n, i, j);
    XPoly xj = XPoly::var(r, n, j).scaled(u);
    return op_add(op_identity(), op_compose(op_mul_by(xj), dd));
}

PolyOperator op_Tbar_inv(RingPtr r, int n, int i, int j) {
    /* Tbar = t^{-1} T_{ij} s_{ij}, hence Tbar^{-1} = s_{ij} T_{ij}^{-1} t */
    Scalar t = Scalar::param(r, Param::t());
    return op_scale(op_compose(op_sij(r, n, i, j), op_Tij_inv(r, n, i, j)), t);
}

PolyOperator build_Yk(int k, int n, RingPtr r) {
    if (!(1 <= k && k <= n)) throw usage_error("Y_k requires 1 <= k <= n");
    PolyOperator op = op_identity();
    /* rightmost factor applies first: T_1^{-1} ... T_{k-1}^{-1} */
    for (int a = k - 1; a >= 1; --a) op = op_compose(op_Tinv(r, n, a), op);
    op = op_compose(op_w(r, n), op);
    for (int a = n - 1; a >= k; --a) op = op_compose(op_T(r, n, a), op);
    Scalar pref = Scalar::param(r, Param::t(), -n + 2 * k - 1);
    return op_scale(std::move(op), pref);
}

PolyOperator build_Ykstar(int k, int n, RingPtr r) {
    if (!(1 <= k && k <= n)) throw usage_error("Y_k^* requires 1 <= k <= n");
    PolyOperator op = op_identity();
    for (int a = k - 1; a >= 1; --a) op = op_compose(op_T(r, n, a), op);
    op = op_compose(op_w(r, n), op);
    for (int a = n - 1; a >= k; --a) op = op_compose(op_Tinv(r, n, a), op);
    Scalar pref = Scalar::param(r, Param::t(), n - 2 * k + 1);
    return op_scale(std::move(op), pref);
}

PolyOperator build_Yi_product_form(int i, int n, RingPtr r) {
    if (!(1 <= i && i <= n)) throw usage_error("index out of range");
    PolyOperator op = op_identity();
    for (int a = i - 1; a >= 1; --a) op = op_compose(op_Tbar_inv(r, n, a, i), op);
    op = op_compose(op_tau(r, n, i), op);
    for (int j = n; j >= i + 1; --j) op = op_compose(op_Tbar(r, n, i, j), op);
    return op;
}

PolyOperator build_classical_Dj(int j, int n, RingPtr beta_ring) {
    if (!(1 <= j && j <= n)) throw usage_error("index out of range");
    Scalar beta = Scalar::param(beta_ring, Param::beta());
    PolyOperator op = op_euler(beta_ring, n, j);
    /* first-order content of the product form: euler term plus one divided
     * difference per neighbour, weights chosen so the family commutes */
    for (int i = 1; i < j; ++i) {
        XPoly xj = XPoly::var(beta_ring, n, j).scaled(beta);
        op = op_add(std::move(op),
                    op_scale(op_compose(op_mul_by(xj), op_dd(beta_ring, n, i, j)),
                             Scalar::constant(beta_ring, -1)));
    }
    for (int k = j + 1; k <= n; ++k) {
        XPoly xk = XPoly::var(beta_ring, n, k).scaled(beta);
        op = op_add(std::move(op), op_compose(op_mul_by(xk), op_dd(beta_ring, n, j, k)));
    }
    return op;
}

std::vector<XPoly> monomial_slice(RingPtr r, int n, int d) {
    /* ascending total degree; within a degree x_1-heavy monomials first */
    std::vector<XPoly> out;
    std::vector<int32_t> e(n, 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == n) {
            if (rem == 0) out.push_back(XPoly::monomial(r, n, e, Scalar::constant(r, 1)));
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[idx] = v;
            rec(idx + 1, rem - v);
        }
        e[idx] = 0;
    };
    for (int deg = 0; deg <= d; ++deg) rec(0, deg);
    return out;
}

std::optional<XPoly> op_equal_on_slice(const PolyOperator& a, const PolyOperator& b, RingPtr r,
                                       int n, int d) {
    if (a.deg_shift > 0 || b.deg_shift > 0)
        throw usage_error("slice check requires degree-nonincreasing operators");
    for (const XPoly& m : monomial_slice(r, n, d)) {
        if (!(a(m) == b(m))) return m;
    }
    return std::nullopt;
}

/* ---------------- operator expression parser ---------------- */

RingPtr qops_default_ring() {
    static RingPtr r = ring_poly({Param::q(), Param::t(), Param::beta()});
    return r;
}

namespace {

struct OpParser {
    const std::string& s;
    size_t pos = 0;
    RingPtr r;
    int n;

    OpParser(const std::string& text, RingPtr ring, int rank) : s(text), r(std::move(ring)), n(rank) {}

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
    [[noreturn]] void fail(const std::string& m) {
        throw usage_error("operator parse error at offset " + std::to_string(pos) + ": " + m);
    }
    long integer() {
        skip();
        size_t st = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (st == pos) fail("expected integer");
        return std::stol(s.substr(st, pos - st));
    }
    std::string ident() {
        skip();
        size_t st = pos;
        while (pos < s.size() && isalnum((unsigned char)s[pos])) ++pos;
        return s.substr(st, pos - st);
    }

    PolyOperator parse() {
        PolyOperator e = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return e;
    }

    PolyOperator expr() {
        bool neg = eat('-');
        if (!neg) eat('+');
        PolyOperator acc = term();
        if (neg) acc = op_scale(std::move(acc), Scalar::constant(r, -1));
        while (true) {
            if (eat('+'))
                acc = op_add(std::move(acc), term());
            else if (eat('-'))
                acc = op_add(std::move(acc), op_scale(term(), Scalar::constant(r, -1)));
            else
                break;
        }
        return acc;
    }

    PolyOperator term() {
        PolyOperator acc = factor();
        while (true) {
            skip();
            if (eat('*'))
                acc = op_compose(std::move(acc), factor());
            else
                break;
        }
        return acc;
    }

    PolyOperator pow(PolyOperator base) {
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative operator power");
            PolyOperator r2 = op_identity();
            for (long k = 0; k < e; ++k) r2 = op_compose(r2, base);
            return r2;
        }
        return base;
    }

    std::vector<long> args(size_t count) {
        if (!eat('(')) fail("expected (");
        std::vector<long> out;
        for (size_t k = 0; k < count; ++k) {
            if (k && !eat(',')) fail("expected ,");
            out.push_back(integer());
        }
        if (!eat(')')) fail("expected )");
        return out;
    }

    PolyOperator factor() {
        skip();
        if (eat('(')) {
            PolyOperator e = expr();
            if (!eat(')')) fail("expected )");
            return pow(std::move(e));
        }
        if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            long v = integer();
            return pow(op_scale(op_identity(), Scalar::constant(r, v)));
        }
        std::string id = ident();
        if (id.empty()) fail("expected operator");
        auto scalar_pow = [&](Param p) {
            long e = 1;
            if (eat('^')) e = integer();
            return op_scale(op_identity(), Scalar::param(r, p, (int)e));
        };
        if (id == "id") return pow(op_identity());
        if (id == "q") return scalar_pow(Param::q());
        if (id == "t") return scalar_pow(Param::t());
        if (id == "beta") return scalar_pow(Param::beta());
        if (id == "w") return pow(op_w(r, n));
        if (id == "s0") return pow(op_s0(r, n));
        if (id == "T") {
            auto a = args(1);
            return pow(op_T(r, n, (int)a[0]));
        }
        if (id == "Tinv") {
            auto a = args(1);
            return pow(op_Tinv(r, n, (int)a[0]));
        }
        if (id == "Tij") {
            auto a = args(2);
            return pow(op_Tij(r, n, (int)a[0], (int)a[1]));
        }
        if (id == "Tbar") {
            auto a = args(2);
            return pow(op_Tbar(r, n, (int)a[0], (int)a[1]));
        }
        if (id == "Tbarinv") {
            auto a = args(2);
            return pow(op_Tbar_inv(r, n, (int)a[0], (int)a[1]));
        }
        if (id == "Y") {
            auto a = args(1);
            return pow(build_Yk((int)a[0], n, r));
        }
        if (id == "Ystar") {
            auto a = args(1);
            return pow(build_Ykstar((int)a[0], n, r));
        }
        if (id == "Yprod") {
            auto a = args(1);
            return pow(build_Yi_product_form((int)a[0], n, r));
        }
        if (id == "Dcl") {
            auto a = args(1);
            return pow(build_classical_Dj((int)a[0], n, r));
        }
        if (id == "x") {
            auto a = args(1);
            return pow(op_mul_by(XPoly::var(r, n, (int)a[0])));
        }
        if (id == "s") {
            auto a = args(2);
            return pow(op_sij(r, n, (int)a[0], (int)a[1]));
        }
        if (id == "dd") {
            auto a = args(2);
            return pow(op_dd(r, n, (int)a[0], (int)a[1]));
        }
        if (id == "tau") {
            auto a = args(1);
            return pow(op_tau(r, n, (int)a[0]));
        }
        if (id == "euler") {
            auto a = args(1);
            return pow(op_euler(r, n, (int)a[0]));
        }
        fail("unknown operator '" + id + "'");
    }
};

}  // namespace

PolyOperator parse_operator(const std::string& text, RingPtr r, int n) {
    OpParser p(text, std::move(r), n);
    return p.parse();
}

}  // namespace qalg

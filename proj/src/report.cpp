#include "report.hpp"

#include <cctype>
#include <sstream>

#include "scalar.hpp"

#include <json.hpp>

namespace qalg {

std::string Report::render_text() const {
    std::ostringstream os;
    for (const auto& r : records) {
        bool first = true;
        for (const auto& [k, v] : r.kv) {
            if (!first) os << " ";
            first = false;
            os << k << "=" << v;
        }
        os << "\n";
    }
    os << "verdict=" << (pass ? "pass" : "fail") << "\n";
    return os.str();
}

std::string Report::render_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["verdict"] = pass ? "pass" : "fail";
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [k, v] : r.kv) obj[k] = v;
        recs.push_back(obj);
    }
    j["records"] = recs;
    return j.dump(2) + "\n";
}

/* ---------------- expect-polynomial grammar ---------------- */

namespace {

using Coeffs = std::vector<mpz_class>;

Coeffs cadd(const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return r;
}
Coeffs cneg(Coeffs a) {
    for (auto& c : a) c = -c;
    return a;
}
Coeffs cmul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
void ctrim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    explicit PolyParser(const std::string& text) : s(text) {}

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
        throw usage_error("polynomial parse error at offset " + std::to_string(pos) + ": " + m);
    }
    long integer() {
        skip();
        size_t st = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (st == pos) fail("expected integer");
        return std::stol(s.substr(st, pos - st));
    }

    Coeffs parse() {
        Coeffs e = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        ctrim(e);
        return e;
    }

    Coeffs expr() {
        bool neg = eat('-');
        if (!neg) eat('+');
        Coeffs acc = term();
        if (neg) acc = cneg(std::move(acc));
        while (true) {
            if (eat('+'))
                acc = cadd(acc, term());
            else if (eat('-'))
                acc = cadd(acc, cneg(term()));
            else
                break;
        }
        return acc;
    }

    Coeffs term() {
        Coeffs acc = factor();
        while (true) {
            skip();
            if (eat('*')) {
                acc = cmul(acc, factor());
            } else if (pos < s.size() && (s[pos] == '(' || s[pos] == 't')) {
                acc = cmul(acc, factor());  // juxtaposition, e.g. 3t^2
            } else {
                break;
            }
        }
        return acc;
    }

    Coeffs power(Coeffs base) {
        if (eat('^')) {
            long e = integer();
            Coeffs r{1};
            for (long k = 0; k < e; ++k) r = cmul(r, base);
            return r;
        }
        return base;
    }

    Coeffs factor() {
        skip();
        if (eat('(')) {
            Coeffs e = expr();
            if (!eat(')')) fail("expected )");
            return power(std::move(e));
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            return power(Coeffs{0, 1});
        }
        if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            long v = integer();
            return Coeffs{v};
        }
        fail("expected factor");
    }
};

}  // namespace

std::vector<mpz_class> parse_expect_poly(const std::string& text) {
    PolyParser p(text);
    return p.parse();
}

std::vector<mpz_class> inv_prod_series(int n, int K) {
    /* h_k(1, 2, ..., n-1) by repeated geometric convolution */
    std::vector<mpz_class> r(K + 1, 0);
    r[0] = 1;
    for (int j = 1; j <= n - 1; ++j) {
        /* divide by (1 - j t): r_k += j * r_{k-1} */
        for (int k = 1; k <= K; ++k) r[k] += j * r[k - 1];
    }
    return r;
}

std::vector<mpz_class> prod_one_plus_jt(int n) {
    std::vector<mpz_class> r{1};
    for (int j = 1; j <= n - 1; ++j) {
        std::vector<mpz_class> nr(r.size() + 1, 0);
        for (size_t k = 0; k < r.size(); ++k) {
            nr[k] += r[k];
            nr[k + 1] += j * r[k];
        }
        r = std::move(nr);
    }
    return r;
}

std::vector<mpz_class> t_factorial(int n) {
    std::vector<mpz_class> r{1};
    for (int j = 1; j <= n; ++j) {
        /* multiply by 1 + t + ... + t^{j-1} */
        std::vector<mpz_class> nr(r.size() + j - 1, 0);
        for (size_t k = 0; k < r.size(); ++k)
            for (int a = 0; a < j; ++a) nr[k + a] += r[k];
        r = std::move(nr);
    }
    return r;
}

std::string dims_str(const std::vector<mpz_class>& dims) {
    std::string s;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (k) s += ",";
        s += dims[k].get_str();
    }
    return s;
}

}  // namespace qalg

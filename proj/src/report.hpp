#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace qalg {

/* line-oriented machine-readable record: key=value pairs, one record per
 * line, final `verdict=` line */
struct Record {
    std::vector<std::pair<std::string, std::string>> kv;
    Record& add(const std::string& k, const std::string& v) {
        kv.push_back({k, v});
        return *this;
    }
    Record& add(const std::string& k, const char* v) { return add(k, std::string(v)); }
    Record& add(const std::string& k, long v) { return add(k, std::to_string(v)); }
    Record& add(const std::string& k, const mpz_class& v) { return add(k, v.get_str()); }
    Record& add(const std::string& k, bool v) { return add(k, std::string(v ? "true" : "false")); }
};

struct Report {
    std::string check;
    std::vector<Record> records;
    bool pass = true;

    Record& line() {
        records.emplace_back();
        return records.back();
    }
    void merge(const Report& o) {
        records.insert(records.end(), o.records.begin(), o.records.end());
        pass = pass && o.pass;
    }
    std::string render_text() const;
    std::string render_json() const;
};

/* coefficients (ascending) of a factored polynomial in t, e.g.
 * "(1+t)^4*(1+t^2)^2*(1+t+t^2)^2" or "1+3t+4t^2+3t^3+t^4" */
std::vector<mpz_class> parse_expect_poly(const std::string& text);

/* series coefficients of 1/((1-t)(1-2t)...(1-(n-1)t)) through degree K */
std::vector<mpz_class> inv_prod_series(int n, int K);
/* coefficients of (1+t)(1+2t)...(1+(n-1)t) */
std::vector<mpz_class> prod_one_plus_jt(int n);
/* coefficients of [n]!_t = prod_j (1-t^j)/(1-t) */
std::vector<mpz_class> t_factorial(int n);

std::string dims_str(const std::vector<mpz_class>& dims);

}  // namespace qalg

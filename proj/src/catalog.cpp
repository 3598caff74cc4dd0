#include "catalog.hpp"

#include <algorithm>
#include <sstream>

namespace qalg {

std::vector<Letter> Presentation::letters() const {
    std::vector<Letter> ls;
    ls.reserve(gens.size());
    for (const auto& g : gens) ls.push_back(letter_of(g, n));
    std::sort(ls.begin(), ls.end());
    return ls;
}

std::optional<Preset> preset_from_name(const std::string& name) {
    static const std::vector<std::pair<std::string, Preset>> table = {
        {"Gn", Preset::Gn},         {"Bn", Preset::Bn},
        {"Ent", Preset::Ent},       {"En0", Preset::En0},
        {"Bnt", Preset::Bnt},       {"Bn0", Preset::Bn0},
        {"Ant", Preset::Ant},       {"An0", Preset::An0},
        {"Lnbeta", Preset::Lnbeta}, {"Pnbeta", Preset::Pnbeta},
        {"GnComm", Preset::GnComm}, {"TildeGn0", Preset::TildeGn0},
    };
    for (const auto& [k, v] : table)
        if (k == name) return v;
    return std::nullopt;
}

std::string preset_name(Preset p) {
    switch (p) {
        case Preset::Gn: return "Gn";
        case Preset::Bn: return "Bn";
        case Preset::Ent: return "Ent";
        case Preset::En0: return "En0";
        case Preset::Bnt: return "Bnt";
        case Preset::Bn0: return "Bn0";
        case Preset::Ant: return "Ant";
        case Preset::An0: return "An0";
        case Preset::Lnbeta: return "Lnbeta";
        case Preset::Pnbeta: return "Pnbeta";
        case Preset::GnComm: return "GnComm";
        case Preset::TildeGn0: return "TildeGn0";
    }
    return "?";
}

std::vector<std::string> preset_names() {
    return {"Gn",  "Bn",  "Ent",    "En0",    "Bnt",    "Bn0",
            "Ant", "An0", "Lnbeta", "Pnbeta", "GnComm", "TildeGn0"};
}

namespace {

struct Builder {
    RingPtr ring;
    int n;
    std::vector<NCPoly> rels;

    NCPoly g(int i, int j) { return NCPoly::gen(ring, n, GenSym::bracket(i, j)); }
    NCPoly x(int i) { return NCPoly::gen(ring, n, GenSym::var(i)); }
    NCPoly cst(long v) { return NCPoly::monomial(ring, n, Word(), Scalar::constant(ring, v)); }
    NCPoly par(const Param& p) { return NCPoly::monomial(ring, n, Word(), Scalar::param(ring, p)); }
    void rel(NCPoly p) {
        if (!p.is_zero()) rels.push_back(std::move(p));
    }

    /* (1.1)-style exchange relations; beta = 0 gives the undeformed pair */
    void exchange(bool with_beta) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    NCPoly tail1 = g(j, k) * g(i, k) + g(i, k) * g(i, j);
                    NCPoly tail2 = g(i, k) * g(j, k) + g(i, j) * g(i, k);
                    if (with_beta) {
                        NCPoly b = par(Param::beta()) * g(i, k);
                        tail1 = tail1 + b;
                        tail2 = tail2 + b;
                    }
                    rel(g(i, j) * g(j, k) - tail1);
                    rel(g(j, k) * g(i, j) - tail2);
                }
    }

    /* (3.1): the two independent 4-term differences of the braid algebra */
    void braid_diff() {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    NCPoly d1 = g(i, j) * g(j, k) - g(j, k) * g(i, j);
                    NCPoly d2 = g(i, k) * g(i, j) - g(i, j) * g(i, k);
                    NCPoly d3 = g(j, k) * g(i, k) - g(i, k) * g(j, k);
                    rel(d1 - d2);
                    rel(d2 - d3);
                }
    }

    void disjoint_commute() {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = i; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                        if (k == i || k == j || l == i || l == j) continue;
                        rel(g(i, j) * g(k, l) - g(k, l) * g(i, j));
                    }
    }

    void all_commute() {
        int nb = bracket_count(n);
        for (int a = 0; a < nb; ++a)
            for (int b = a + 1; b < nb; ++b) {
                GenSym ga = sym_of((Letter)a, n), gb = sym_of((Letter)b, n);
                NCPoly A = NCPoly::gen(ring, n, ga), B = NCPoly::gen(ring, n, gb);
                rel(A * B - B * A);
            }
    }

    /* squares [ij]^2 = value (0, t_{ij}, or beta*[ij]) */
    void squares(int mode /*0: zero, 1: t_ij, 2: beta*gen*/) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                NCPoly sq = g(i, j) * g(i, j);
                if (mode == 0) rel(sq);
                if (mode == 1) rel(sq - par(Param::tij(i, j)));
                if (mode == 2) rel(sq - par(Param::beta()) * g(i, j));
            }
    }

    /* (5.1): squares are central, emitted for all ordered pairs of distinct
     * generators */
    void central_squares() {
        int nb = bracket_count(n);
        for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b) {
                if (a == b) continue;
                GenSym ga = sym_of((Letter)a, n), gb = sym_of((Letter)b, n);
                NCPoly A = NCPoly::gen(ring, n, ga), B = NCPoly::gen(ring, n, gb);
                rel(A * B * B - B * B * A);
            }
    }
};

std::vector<Param> tij_params(int n) {
    std::vector<Param> ps;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ps.push_back(Param::tij(i, j));
    return ps;
}

}  // namespace

Presentation build(Preset preset, int n, const BuildOptions& opts) {
    if (n < 2) throw usage_error("preset requires n >= 2");
    if (n > 12) throw usage_error("rank too large (n <= 12)");
    Presentation p;
    p.name = preset_name(preset) + "(" + std::to_string(n) + ")";
    p.n = n;
    p.homogeneous = true;

    bool vars = preset == Preset::TildeGn0;
    switch (preset) {
        case Preset::Ent:
        case Preset::Bnt:
        case Preset::Ant: p.params = tij_params(n); break;
        case Preset::Lnbeta:
        case Preset::Pnbeta: p.params = {Param::beta()}; break;
        default: break;
    }
    p.ring = p.params.empty() ? ring_int() : ring_poly(p.params);

    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) p.gens.push_back(GenSym::bracket(i, j));
    std::sort(p.gens.begin(), p.gens.end(), [&](const GenSym& a, const GenSym& b) {
        return letter_of(a, n) < letter_of(b, n);
    });
    if (vars)
        for (int i = 1; i <= n; ++i) p.gens.push_back(GenSym::var(i));

    Builder b{p.ring, n, {}};
    switch (preset) {
        case Preset::Gn:
            b.exchange(false);
            b.disjoint_commute();
            break;
        case Preset::Bn:
            b.braid_diff();
            b.disjoint_commute();
            break;
        case Preset::Ent:
            b.exchange(false);
            b.disjoint_commute();
            b.squares(1);
            b.central_squares();
            p.homogeneous = false;
            break;
        case Preset::En0:
            b.exchange(false);
            b.disjoint_commute();
            b.squares(0);
            b.central_squares();
            break;
        case Preset::Bnt:
            b.braid_diff();
            b.disjoint_commute();
            b.squares(1);
            p.homogeneous = false;
            break;
        case Preset::Bn0:
            b.braid_diff();
            b.disjoint_commute();
            b.squares(0);
            break;
        case Preset::Ant:
            b.all_commute();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        b.rel(b.g(i, j) * b.g(j, k) - b.g(i, k) * b.g(i, j) -
                              b.g(i, k) * b.g(j, k));
            b.squares(1);
            p.homogeneous = false;
            break;
        case Preset::An0:
            b.all_commute();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        b.rel(b.g(i, j) * b.g(j, k) - b.g(i, k) * b.g(i, j) -
                              b.g(i, k) * b.g(j, k));
            b.squares(0);
            break;
        case Preset::Lnbeta:
            b.exchange(true);
            b.disjoint_commute();
            p.homogeneous = false;
            break;
        case Preset::Pnbeta:
            b.all_commute();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        b.rel(b.g(i, j) * b.g(j, k) - b.g(j, k) * b.g(i, k) -
                              b.g(i, k) * b.g(i, j) + b.par(Param::beta()) * b.g(i, k));
            b.squares(2);
            p.homogeneous = false;
            break;
        case Preset::GnComm:
            /* commutativity imposed for every index pattern; the exchange
             * relations are not part of this quotient (the graded dimensions
             * are those of a polynomial ring on the C(n,2) generators) */
            b.all_commute();
            break;
        case Preset::TildeGn0:
            b.exchange(false);
            b.disjoint_commute();
            b.squares(0);
            /* x_i x_j = x_j x_i */
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) b.rel(b.x(i) * b.x(j) - b.x(j) * b.x(i));
            /* x_i [ab] = [ab] x_i for i not in {a,b} */
            for (int i = 1; i <= n; ++i)
                for (int a = 1; a <= n; ++a)
                    for (int bb = a + 1; bb <= n; ++bb) {
                        if (i == a || i == bb) continue;
                        b.rel(b.x(i) * b.g(a, bb) - b.g(a, bb) * b.x(i));
                    }
            /* x_j [ij] = [ij] x_i + 1,  x_i [ij] = [ij] x_j - 1 */
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    b.rel(b.x(j) * b.g(i, j) - b.g(i, j) * b.x(i) - b.cst(1));
                    b.rel(b.x(i) * b.g(i, j) - b.g(i, j) * b.x(j) + b.cst(1));
                }
            p.homogeneous = false;
            break;
    }

    p.relations = std::move(b.rels);

    if (!opts.numeric.empty()) {
        std::map<Param, Scalar> bind;
        for (const auto& [pm, v] : opts.numeric) bind.emplace(pm, Scalar::rational(v));
        RingPtr target = ring_rat();
        std::vector<Param> kept;
        for (const auto& pm : p.params)
            if (!opts.numeric.count(pm)) kept.push_back(pm);
        if (!kept.empty()) target = ring_poly(kept);
        std::vector<NCPoly> rels2;
        for (const auto& r : p.relations) {
            NCPoly r2(target, n);
            for (const auto& [w, c] : r.terms) {
                Scalar c2 = c.evaluate(bind, target);
                if (!c2.is_zero()) r2.terms.push_back({w, c2});
            }
            sort_terms(r2.terms);
            if (!r2.is_zero()) rels2.push_back(std::move(r2));
        }
        p.relations = std::move(rels2);
        p.ring = target;
        p.params = kept;
        p.homogeneous = true;
        for (const auto& r : p.relations)
            if (!r.homogeneous()) p.homogeneous = false;
    }
    return p;
}

/* ---------------- file format ---------------- */

static RingPtr parse_ring_name(const std::string& s, std::vector<Param>& params) {
    if (s == "Z") return ring_int();
    if (s == "Q") return ring_rat();
    if (s.rfind("Fp:", 0) == 0) return ring_fp(std::stoull(s.substr(3)));
    if (s == "Q(t)") {
        params = {Param::t()};
        return ring_poly(params);
    }
    if (s == "Q(beta)") {
        params = {Param::beta()};
        return ring_poly(params);
    }
    if (s == "Q(q,t)") {
        params = {Param::q(), Param::t()};
        return ring_poly(params);
    }
    throw usage_error("unknown ring '" + s + "'");
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    p.ring = ring_int();
    p.n = 0;
    bool homog_declared = false, homog_value = false;
    std::vector<std::string> rel_lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r\n");
        size_t b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto header = [&](const char* key) -> std::optional<std::string> {
            std::string k = std::string(key) + ":";
            if (line.rfind(k, 0) == 0) return trim(line.substr(k.size()));
            return std::nullopt;
        };
        try {
            if (auto v = header("name")) {
                p.name = *v;
            } else if (auto v = header("n")) {
                p.n = std::stoi(*v);
            } else if (auto v = header("ring")) {
                p.ring = parse_ring_name(*v, p.params);
            } else if (auto v = header("homogeneous")) {
                homog_declared = true;
                homog_value = (*v == "true");
                if (*v != "true" && *v != "false")
                    throw usage_error("homogeneous must be true or false");
            } else {
                rel_lines.push_back(line);
            }
        } catch (const std::exception& e) {
            throw usage_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (p.n < 2) throw usage_error("presentation requires header n: >= 2");
    if (p.name.empty()) p.name = "user";

    bool any_var = false;
    for (const auto& rl : rel_lines) {
        NCPoly e = parse_element(rl, p.ring, p.n);
        for (const auto& [w, c] : e.terms)
            for (Letter l : w)
                if (sym_of(l, p.n).is_var) any_var = true;
        p.relations.push_back(std::move(e));
    }
    for (int j = 2; j <= p.n; ++j)
        for (int i = 1; i < j; ++i) p.gens.push_back(GenSym::bracket(i, j));
    if (any_var)
        for (int i = 1; i <= p.n; ++i) p.gens.push_back(GenSym::var(i));

    p.homogeneous = true;
    for (const auto& r : p.relations)
        if (!r.homogeneous()) p.homogeneous = false;
    if (homog_declared && homog_value && !p.homogeneous)
        throw usage_error("declared homogeneous but an inhomogeneous relation is present");
    if (homog_declared) p.homogeneous = homog_value && p.homogeneous;
    return p;
}

std::string Presentation::render() const {
    std::ostringstream os;
    os << "name: " << name << "\n";
    os << "n: " << n << "\n";
    std::string rname = "Z";
    switch (ring->kind) {
        case Ring::Kind::Int: rname = "Z"; break;
        case Ring::Kind::Rat: rname = "Q"; break;
        case Ring::Kind::Fp: rname = "Fp:" + std::to_string(ring->p); break;
        default: {
            rname = "Q(";
            for (size_t i = 0; i < ring->params.size(); ++i) {
                if (i) rname += ",";
                rname += ring->params[i].name();
            }
            rname += ")";
        }
    }
    os << "ring: " << rname << "\n";
    os << "homogeneous: " << (homogeneous ? "true" : "false") << "\n";
    for (const auto& r : relations) os << r.str() << "\n";
    return os.str();
}

}  // namespace qalg

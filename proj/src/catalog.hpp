#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freealg.hpp"

namespace qalg {

/* Named algebra presentation: generator list, relation list (each relation
 * read as `= 0`), coefficient ring, central parameters. */
struct Presentation {
    std::string name;
    int n = 0;
    std::vector<GenSym> gens;
    std::vector<NCPoly> relations;
    RingPtr ring;
    bool homogeneous = true;
    std::vector<Param> params;

    std::vector<Letter> letters() const;  // generator letter codes, ascending
    std::string render() const;           // presentation-file text round-trip
};

enum class Preset {
    Gn,
    Bn,
    Ent,
    En0,
    Bnt,
    Bn0,
    Ant,
    An0,
    Lnbeta,
    Pnbeta,
    GnComm,
    TildeGn0,
};

std::optional<Preset> preset_from_name(const std::string& name);
std::string preset_name(Preset p);
std::vector<std::string> preset_names();

struct BuildOptions {
    /* numeric specialization of the preset's parameters (generic if empty) */
    std::map<Param, mpq_class> numeric;
};

Presentation build(Preset preset, int n, const BuildOptions& opts = {});

/* Presentation file format (UTF-8): header lines `name:`, `n:`, `ring:`
 * (Z | Q | Fp:<prime> | Q(t) | Q(beta) | Q(q,t)), `homogeneous: true|false`,
 * then one relation per line in element syntax, `= 0` implied.  `#` starts a
 * comment. */
Presentation parse_presentation(const std::string& text);

}  // namespace qalg

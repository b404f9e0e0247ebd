// JSON and dot serialization for the command line tool, plus the JSON-lines
// cache holding engine expansions between runs.
#pragma once

#include "chromod/analysis.hpp"
#include "chromod/network.hpp"
#include "chromod/oracle.hpp"
#include "chromod/verify.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace chromod {

using Json = nlohmann::ordered_json;

// {"schema": "chromod/1", "command": <command>}
Json json_envelope(const std::string& command);

// coefficients as decimal strings, constant term first; zero is []
Json json_poly(const QPoly& p);
// a polynomial serializes as its coefficient array, anything else as
// {"num": [...], "den": [...]}
Json json_rat(const QRat& r);
Json json_partition(const Partition& lambda);
// degree, basis, and the coefficient list in partition order
Json json_symfunc(const SymFunc& f);
// terms as {"lambda": [...], "num": [...], "den": [...]}
Json json_expansion(const Expansion& exp);
// {"xcoeffs": [{"num": ..., "den": ...}, ...]} by rising x-degree, dense
Json json_xpoly(const XPoly& f);
Json json_network(const PlanarNetwork& net);
std::string network_dot(const PlanarNetwork& net);
// h, two_center, coefficient count, and failures; `check` keeps a single
// failure kind, "all" keeps every kind
Json json_shape_report(const ShapeReport& rep, const std::string& check);
Json json_suite_result(const SuiteResult& r);

// Cache file: a header line {"schema":"chromod/1","kind":"engine-cache"}
// followed by one line {"h": [...], "terms": [...]} per memo entry.
void save_cache(const std::string& path,
                const std::map<std::vector<int>, Expansion>& entries);
// a missing file reads as empty; a bad header or line throws
// std::runtime_error naming the offending line
std::map<std::vector<int>, Expansion> load_cache(const std::string& path);

}  // namespace chromod

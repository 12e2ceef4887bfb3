#pragma once

#include "tabhom/lincomb.hpp"
#include "tabhom/multiset.hpp"
#include "tabhom/tableau.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tabhom {

using Json = nlohmann::json;

struct ParseOptions {
  /// Reject rows that are not weakly increasing instead of sorting them.
  bool strict = false;
};

/// Diagnostics collected while parsing, e.g. rows that had to be sorted.
struct ParseNotes {
  std::vector<std::string> warnings;
};

/// "{1,2,2}", "1 2 2" or "1,2,2"; "{}" or "" is empty.
Multiset parse_multiset(std::string_view text);

/// Rows separated by "/" or newlines, entries by spaces.
Tableau parse_tableau(std::string_view text, ParseOptions options = {}, ParseNotes* notes = nullptr);
/// Tableaux separated by blank lines.
std::vector<Tableau> parse_tableaux(std::string_view text, ParseOptions options = {},
                                    ParseNotes* notes = nullptr);
/// One row per line.
std::string render_tableau_lines(const Tableau& t);

/// {"shape": [...], "rows": [[...], ...]}
Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j, ParseOptions options = {}, ParseNotes* notes = nullptr);

/// Accepts either JSON or the text grammar.
Tableau parse_tableau_any(std::string_view text, ParseOptions options = {}, ParseNotes* notes = nullptr);

/// Inverse of LinComb::to_string: "coeff : tableau" lines, or "0".
LinComb parse_lincomb(std::string_view text, ParseOptions options = {});

/// {"shape": [...], "type": [...], "terms": [{"coeff": "...", "rows": [...]}, ...]}
Json lincomb_to_json(const LinComb& c);
Json lincomb_to_json(const RationalLinComb& c);
LinComb lincomb_from_json(const Json& j, ParseOptions options = {});

/// Accepts either JSON or the text grammar.
LinComb parse_lincomb_any(std::string_view text, ParseOptions options = {});

/// "(5,4)", "5,4" or "5 4".
Composition parse_composition(std::string_view text);

}  // namespace tabhom

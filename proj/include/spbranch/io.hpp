#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "spbranch/branching.hpp"
#include "spbranch/reduction.hpp"
#include "spbranch/tableau.hpp"
#include "spbranch/verification.hpp"

namespace spbranch::io {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const SkewShape& s);
json to_json(const Column& c);
json to_json(const Tableau& t);
json to_json(const LrResult& r);
/// Entries sorted by nu, lexicographically decreasing.
json to_json(const MultiplicityTable& table);

Partition partition_from_json(const json& j);
SkewShape skew_shape_from_json(const json& j);
/// Accepts {"outer":[..],"inner":[..],"rows":[[..],..]}; "inner" may be
/// omitted and "outer" is optional when it matches the rows.
Tableau tableau_from_json(const json& j);
/// A JSON array of strictly increasing integers in [1, alphabet].
Column column_from_json(const json& j, int alphabet);

/// Rows of whitespace-separated integers, '.' marking inner cells.
Tableau parse_text_grid(std::string_view text);
/// JSON when the first non-blank character is '{' or '[', else a text grid.
Tableau parse_tableau(std::string_view text);

/// Box-drawing rendering of the Young diagram with its entries. Inner cells
/// of a skew shape are left blank. The empty tableau renders as "∅".
std::string pretty(const Tableau& t);

std::string format_set(const std::vector<int>& values);
std::string format_tuple(const std::vector<int>& values);

/// "column not strictly increasing at (3,1)"-style diagnostics for a straight
/// tableau over [1, m]; empty string when it is semistandard.
std::string semistandard_violation(const Tableau& t, int m);

}  // namespace spbranch::io

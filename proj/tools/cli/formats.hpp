#pragma once

// Output schemas of the isosquare CLI.
//
//   enumerate   plain: one member per line; csv: header "n"; json-lines: {"n":..}
//   count       csv: header "n,count"; plain: "n count"; json-lines: {"n":..,"count":..}
//   construct   json-lines, one record per stage:
//                 {"seed":"5","stage":"inflate","value":"20737","bits":15,
//                  "weight":4,"square_weight":10,"rule":"affix_one x2"}
//               value and seed are decimal strings (they exceed 64 bits).
//   analyze     profile csv: header "n,log2n,profile_value"
//   checkpoint  text, one "chunk_end count" record per line
//
// CSV outputs have exactly one header row. JSON-lines outputs hold one object
// per line and no enclosing array.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "isosquare/analysis.hpp"
#include "isosquare/constructions.hpp"
#include "isosquare/enumeration.hpp"

namespace isosquare::cli {

enum class OutputFormat { plain, csv, json_lines };

/// "plain", "csv" or "json-lines"; anything else throws InvalidArgument.
OutputFormat parse_format(std::string_view text);
std::string_view format_name(OutputFormat format);

void write_trace(std::ostream& out, const ConstructionTrace& trace, OutputFormat format);
void write_counts(std::ostream& out, const std::vector<CountSample>& samples, OutputFormat format);
void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& profile);

}  // namespace isosquare::cli

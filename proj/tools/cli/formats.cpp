#include "cli/formats.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "isosquare/errors.hpp"

namespace isosquare::cli {

OutputFormat parse_format(std::string_view text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json-lines") return OutputFormat::json_lines;
  throw InvalidArgument("unknown format '" + std::string(text) + "' (expected plain, csv or json-lines)");
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::plain: return "plain";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json_lines: return "json-lines";
  }
  return "plain";
}

void write_trace(std::ostream& out, const ConstructionTrace& trace, OutputFormat format) {
  const std::string seed = to_decimal(trace.seed);
  if (format == OutputFormat::json_lines) {
    for (const auto& stage : trace.stages) {
      nlohmann::ordered_json record;
      record["seed"] = seed;
      record["stage"] = std::string(stage_name(stage.stage));
      record["value"] = to_decimal(stage.value);
      record["bits"] = stage.bits;
      record["weight"] = stage.weight;
      record["square_weight"] = stage.square_weight;
      record["rule"] = stage.rule;
      out << record.dump() << '\n';
    }
    return;
  }
  out << "seed " << seed << '\n';
  for (const auto& stage : trace.stages) {
    out << "  " << std::left << std::setw(10) << stage_name(stage.stage) << std::right
        << " value=" << to_decimal(stage.value) << " bits=" << stage.bits << " weight=" << stage.weight
        << " square_weight=" << stage.square_weight << " rule=" << stage.rule << '\n';
  }
  out << "  final " << to_decimal(trace.final_value) << (trace.verify() ? " verified member" : " UNVERIFIED")
      << '\n';
}

void write_counts(std::ostream& out, const std::vector<CountSample>& samples, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      out << "n,count\n";
      for (const auto& s : samples) out << s.n << ',' << s.count << '\n';
      break;
    case OutputFormat::plain:
      for (const auto& s : samples) out << s.n << ' ' << s.count << '\n';
      break;
    case OutputFormat::json_lines:
      for (const auto& s : samples) out << nlohmann::ordered_json{{"n", s.n}, {"count", s.count}}.dump() << '\n';
      break;
  }
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& profile) {
  out << "n,log2n,profile_value\n";
  out << std::setprecision(12);
  for (const auto& p : profile) out << p.n << ',' << p.log2n << ',' << p.value << '\n';
}

}  // namespace isosquare::cli

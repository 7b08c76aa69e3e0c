#include <fstream>
#include <sstream>
#include <string>

#include "isosquare/enumeration.hpp"
#include "isosquare/errors.hpp"

namespace isosquare {

Checkpoint::Checkpoint(std::filesystem::path path) : path_(std::move(path)) {
  std::ofstream probe(path_, std::ios::app);
  if (!probe) throw IoError("checkpoint: cannot open '" + path_.string() + "' for writing");
  last_ = last();
}

std::vector<CheckpointRecord> Checkpoint::load() const {
  std::vector<CheckpointRecord> records;
  std::ifstream in(path_);
  if (!in) return records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    CheckpointRecord record;
    std::string extra;
    if (!(fields >> record.chunk_end >> record.count) || (fields >> extra)) {
      throw IoError("checkpoint: malformed record at line " + std::to_string(line_number));
    }
    if (!records.empty() &&
        (record.chunk_end <= records.back().chunk_end || record.count < records.back().count)) {
      throw IoError("checkpoint: non-monotone record at line " + std::to_string(line_number));
    }
    records.push_back(record);
  }
  return records;
}

std::optional<CheckpointRecord> Checkpoint::last() const {
  auto records = load();
  if (records.empty()) return std::nullopt;
  return records.back();
}

void Checkpoint::append(const CheckpointRecord& record) {
  if (last_ && (record.chunk_end <= last_->chunk_end || record.count < last_->count)) {
    throw InvalidArgument("checkpoint: record would break monotonicity");
  }
  std::ofstream out(path_, std::ios::app);
  out << record.chunk_end << ' ' << record.count << '\n';
  out.flush();
  if (!out) throw IoError("checkpoint: write to '" + path_.string() + "' failed");
  last_ = record;
}

}  // namespace isosquare

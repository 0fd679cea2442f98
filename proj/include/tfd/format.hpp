#pragma once
// Serialization of classifier output: versioned JSON, markdown and TSV.
#include <string>
#include <vector>

#include "tfd/classifier.hpp"

namespace tfd {

inline constexpr const char* kSchemaVersion = "tfd-table/1";

std::string to_json(const std::vector<TFDRecord>& records, int indent = 2);
// Rebuilds records from a JSON document and checks every stored field against the rebuild.
std::vector<TFDRecord> from_json(const std::string& text);

std::string to_markdown(const std::vector<TFDRecord>& records);
std::string to_tsv(const std::vector<TFDRecord>& records);

// One cell per fixed level, as in the published table.
std::string level_cell(const TFDRecord& r, int level);

}  // namespace tfd

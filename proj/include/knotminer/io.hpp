#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "knotminer/corpus.hpp"
#include "knotminer/diagram.hpp"
#include "knotminer/mining.hpp"

namespace knotminer {

/// Reads JSON Lines records `{"id": "...", "gauss": "..."}`. Blank lines are
/// skipped. Errors carry the line number and, when known, the record id.
KnotDatabase read_database(std::istream& in);
KnotDatabase read_database_file(const std::filesystem::path& path);

void write_database(std::ostream& out, const KnotDatabase& db);

/// JSON array of `{"id": ..., "multiset": {...}}` for each record.
void write_truth(std::ostream& out, const KnotDatabase& db, std::span<const Decomposition> planted);

/// Header `id,<prime ids>`, then one row of counts per record.
void write_transactions_csv(std::ostream& out, const KnotDatabase& db, const EncodedDatabase& encoded);

/// JSON array of `{"name", "multiset", "support", "gauss"}` in report order.
std::string report_to_json(const MiningReport& report);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace knotminer

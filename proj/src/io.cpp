#include "knotminer/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "knotminer/error.hpp"

namespace knotminer {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ordered_json multiset_json(const Decomposition& d) {
  ordered_json m = ordered_json::object();
  for (const auto& [id, n] : d.counts()) m[id.value] = n;
  return m;
}

}  // namespace

KnotDatabase read_database(std::istream& in) {
  KnotDatabase db;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no);
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw ParseError(ParseError::Kind::Record, where + ": invalid JSON");
    }
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string()) {
      throw ParseError(ParseError::Kind::Record, where + ": missing string field \"id\"");
    }
    const auto id = record["id"].get<std::string>();
    if (!record.contains("gauss") || !record["gauss"].is_string()) {
      throw ParseError(ParseError::Kind::Record, where + " (id '" + id + "'): missing string field \"gauss\"");
    }
    try {
      db.add({id, parse_gauss(record["gauss"].get<std::string>())});
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), where + " (id '" + id + "'): " + e.what());
    }
  }
  if (in.bad()) throw IoError("read failure");
  return db;
}

KnotDatabase read_database_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return read_database(in);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path.string() + ": " + e.what());
  }
}

void write_database(std::ostream& out, const KnotDatabase& db) {
  for (const auto& r : db.records()) {
    out << "{\"id\": " << nlohmann::json(r.id).dump() << ", \"gauss\": " << nlohmann::json(render_gauss(r.diagram)).dump()
        << "}\n";
  }
}

void write_truth(std::ostream& out, const KnotDatabase& db, std::span<const Decomposition> planted) {
  ordered_json arr = ordered_json::array();
  const auto records = db.records();
  for (std::size_t i = 0; i < records.size() && i < planted.size(); ++i) {
    arr.push_back(ordered_json{{"id", records[i].id}, {"multiset", multiset_json(planted[i])}});
  }
  out << arr.dump(2) << '\n';
}

void write_transactions_csv(std::ostream& out, const KnotDatabase& db, const EncodedDatabase& encoded) {
  out << "id";
  for (const auto& e : encoded.index.entries()) out << ',' << csv_field(e.id.value);
  out << '\n';
  const auto records = db.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << csv_field(records[i].id);
    for (const auto c : encoded.transactions[i].counts) out << ',' << c;
    out << '\n';
  }
}

std::string report_to_json(const MiningReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json m = ordered_json::object();
    for (const auto& [id, n] : e.multiset) m[id] = n;
    arr.push_back(ordered_json{{"name", e.name}, {"multiset", std::move(m)}, {"support", e.support}, {"gauss", e.gauss}});
  }
  return arr.empty() ? std::string("[]\n") : arr.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace knotminer

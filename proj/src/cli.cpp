#include "knotminer/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotminer/catalog.hpp"
#include "knotminer/corpus.hpp"
#include "knotminer/error.hpp"
#include "knotminer/factor.hpp"
#include "knotminer/invariants.hpp"
#include "knotminer/io.hpp"
#include "knotminer/mining.hpp"
#include "knotminer/moves.hpp"

namespace knotminer {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CatalogFlags {
  std::size_t max_crossings = 7;
  std::size_t cap = kDefaultBracketCapacity;
  std::string extension;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-crossings", max_crossings, "Largest bundled catalog knot (3..7)")->capture_default_str();
    cmd->add_option("--cap", cap, "Bracket crossing capacity")->capture_default_str();
    cmd->add_option("--catalog", extension, "Extra catalog entries (JSON Lines)");
  }

  BracketOptions bracket() const { return BracketOptions{cap, 0}; }

  Catalog load() const {
    Catalog c = builtin_catalog(max_crossings);
    if (!extension.empty()) {
      std::ifstream in(extension);
      if (!in) throw IoError("cannot open '" + extension + "' for reading");
      c.load_extension(in, bracket());
    }
    return c;
  }
};

std::string one_line(std::string s) {
  for (auto& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

ordered_json invariants_json(const Diagram& d, const BracketOptions& options) {
  const LaurentPoly v = jones(d, options);
  return ordered_json{{"jones", v.to_string("t")}, {"writhe", writhe(d)}, {"determinant", determinant(v)}};
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent knot mining over knot databases", "knotminer"};
  app.require_subcommand(1);

  CorpusParams gen_params;
  std::string gen_out;
  std::string gen_truth;
  auto* gen = app.add_subcommand("gen", "Generate a seeded synthetic knot database");
  gen->add_option("--count", gen_params.count, "Number of records")->required();
  gen->add_option("--max-factors", gen_params.max_factors, "Prime factors per knot, at most")->capture_default_str();
  gen->add_option("--moves", gen_params.moves, "R1/R2 insertions per factor")->capture_default_str();
  gen->add_option("--max-crossings", gen_params.max_crossings, "Largest catalog knot drawn (3..7)")
      ->capture_default_str();
  gen->add_option("--seed", gen_params.seed, "Random seed")->capture_default_str();
  gen->add_option("--global-moves", gen_params.global_moves, "R1/R2 insertions after composition")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Database file (JSON Lines)")->required();
  gen->add_option("--truth", gen_truth, "Planted decompositions (JSON)");

  std::string inv_in;
  std::string inv_gauss;
  std::size_t inv_cap = kDefaultBracketCapacity;
  auto* inv = app.add_subcommand("invariants", "Print Jones polynomial, writhe and determinant");
  auto* inv_in_opt = inv->add_option("--in", inv_in, "Knot database (JSON Lines)");
  auto* inv_gauss_opt = inv->add_option("--gauss", inv_gauss, "Extended Gauss code");
  inv_in_opt->excludes(inv_gauss_opt);
  inv->add_option("--cap", inv_cap, "Bracket crossing capacity")->capture_default_str();

  std::string simp_gauss;
  auto* simp = app.add_subcommand("simplify", "Apply R1/R2 reductions until none applies");
  simp->add_option("--gauss", simp_gauss, "Extended Gauss code")->required();

  std::string dec_db;
  CatalogFlags dec_flags;
  auto* dec = app.add_subcommand("decompose", "Print each record's prime decomposition");
  dec->add_option("--db", dec_db, "Knot database (JSON Lines)")->required();
  dec_flags.attach(dec);

  std::string enc_db;
  std::string enc_out;
  CatalogFlags enc_flags;
  auto* enc = app.add_subcommand("encode", "Export the transaction database as CSV");
  enc->add_option("--db", enc_db, "Knot database (JSON Lines)")->required();
  enc->add_option("--out", enc_out, "CSV output file")->required();
  enc_flags.attach(enc);

  std::string mine_db;
  std::string mine_out;
  MinerOptions miner;
  CatalogFlags mine_flags;
  auto* mine = app.add_subcommand("mine", "Mine frequent knots (support > sigma)");
  mine->add_option("--db", mine_db, "Knot database (JSON Lines)")->required();
  mine->add_option("--sigma", miner.sigma, "Support threshold (strict)")->required();
  mine->add_option("--out", mine_out, "Report file (JSON); stdout when omitted");
  mine->add_flag("--restrict-to-db", miner.restrict_to_db, "Only report knots equal to a database member");
  mine_flags.attach(mine);

  std::vector<const char*> argv{"knotminer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Corpus corpus = gen_database(gen_params);
      std::ostringstream db_text;
      write_database(db_text, corpus.database);
      write_text_file(gen_out, db_text.str());
      if (!gen_truth.empty()) {
        std::ostringstream truth_text;
        write_truth(truth_text, corpus.database, corpus.planted);
        write_text_file(gen_truth, truth_text.str());
      }
    } else if (inv->parsed()) {
      const BracketOptions options{inv_cap, 0};
      if (!inv_gauss_opt->empty()) {
        out << invariants_json(parse_gauss(inv_gauss), options).dump() << '\n';
      } else if (!inv_in_opt->empty()) {
        const KnotDatabase db = read_database_file(inv_in);
        for (const auto& r : db.records()) {
          ordered_json line{{"id", r.id}};
          try {
            line.update(invariants_json(r.diagram, options));
          } catch (const CapacityError& e) {
            throw CapacityError("record '" + r.id + "': " + e.what());
          }
          out << line.dump() << '\n';
        }
      } else {
        err << "usage error: invariants needs --in or --gauss\n";
        return kExitUsage;
      }
    } else if (simp->parsed()) {
      out << render_gauss(simplify(parse_gauss(simp_gauss))) << '\n';
    } else if (dec->parsed()) {
      const Catalog catalog = dec_flags.load();
      const KnotDatabase db = read_database_file(dec_db);
      const auto indexed = build_indexed_database(db, catalog, dec_flags.bracket());
      const auto records = db.records();
      for (std::size_t i = 0; i < records.size(); ++i) {
        ordered_json m = ordered_json::object();
        for (const auto& [id, n] : indexed.decompositions[i].counts()) m[id.value] = n;
        out << ordered_json{{"id", records[i].id}, {"multiset", std::move(m)}}.dump() << '\n';
      }
    } else if (enc->parsed()) {
      const Catalog catalog = enc_flags.load();
      const KnotDatabase db = read_database_file(enc_db);
      const auto encoded = encode_db(db, catalog, enc_flags.bracket());
      std::ostringstream csv;
      write_transactions_csv(csv, db, encoded);
      write_text_file(enc_out, csv.str());
    } else if (mine->parsed()) {
      const Catalog catalog = mine_flags.load();
      const KnotDatabase db = read_database_file(mine_db);
      miner.bracket = mine_flags.bracket();
      const std::string json = report_to_json(run_knotminer(db, catalog, miner));
      if (mine_out.empty()) {
        out << json;
      } else {
        write_text_file(mine_out, json);
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << one_line(e.what()) << '\n';
    return kExitParse;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << one_line(e.what()) << '\n';
    return kExitCapacity;
  } catch (const IoError& e) {
    err << "i/o error: " << one_line(e.what()) << '\n';
    return kExitIo;
  } catch (const RangeError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const LengthError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace knotminer

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixtureRow {
  std::string family;  // e6 ... g2; su, so, sp for table 3
  std::string id;
  std::vector<std::string> generators;
  std::string fixed;   // expected fixed algebra spelling
  std::vector<std::string> involution_type;  // table 4
  std::string speciality;  // table 4: one letter; table 3: a set such as "NS"
  // table 1
  std::string involution_class;
  std::string module;
  int dim_p = 0;
  int summands = 0;
  // table 3
  std::string ambient, gamma, type;
  std::string provenance;
};

struct Fixture {
  int table_id = 0;
  std::vector<FixtureRow> rows;
  std::map<std::string, int> berger_counts;  // table 4 only
};

// Throws FixtureError on malformed files, unknown recipes or unparseable spellings.
Fixture load_fixture(const std::string& path);
Fixture load_fixture(int table_id, const std::string& dir);
std::string default_fixture_dir();

// Emitted record; the schema shared by the JSON and markdown output.
struct Record {
  std::string family;
  std::string id;
  std::vector<std::string> generators;
  std::string fixed_type;
  std::vector<std::string> involution_type;
  std::string speciality;
  std::vector<int> dims;
  friend bool operator==(const Record&, const Record&) = default;
};

enum class RowStatus { Pass, Mismatch, Error, Skipped };
const char* to_string(RowStatus s);

struct RowReport {
  std::string family;
  std::string id;
  std::vector<int> params;
  std::string provenance;
  RowStatus status = RowStatus::Pass;
  std::vector<std::string> problems;  // "field: computed X, expected Y", or the error / skip reason
  std::vector<std::string> notes;
  Record record;
  double seconds = 0;
};

struct VerificationReport {
  int table_id = 0;
  std::vector<RowReport> rows;
  int passed = 0, mismatched = 0, errors = 0, skipped = 0;
  bool ok() const { return mismatched == 0 && errors == 0; }
  int total() const { return static_cast<int>(rows.size()); }
  // Deterministic unless timings are requested.
  std::string text(bool timings = false) const;
};

struct VerifyOptions {
  std::string family;  // empty: all
  int bound = 8;       // table 3 rank bound
  std::uint64_t seed = 0;
  int jobs = 1;
};

VerificationReport verify_table(const Fixture& fixture, const VerifyOptions& options = {});

std::vector<Record> records(const VerificationReport& report);
std::string emit_json(const std::vector<Record>& rows);
std::string emit_markdown(const std::vector<Record>& rows);
std::vector<Record> parse_records_json(const std::string& text);

}  // namespace klein

#include "klein/tables.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "klein/classify.hpp"
#include "klein/matclassical.hpp"

namespace klein {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string join_ints(const std::vector<int>& v, const std::string& sep = ",") {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

template <class T>
T field(const json& row, const char* key, int index) {
  if (!row.contains(key)) throw FixtureError("row " + std::to_string(index) + ": missing field '" + key + "'");
  try {
    return row.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FixtureError("row " + std::to_string(index) + ": bad field '" + key + "': " + e.what());
  }
}

template <class T>
T optional_field(const json& row, const char* key, T fallback) {
  return row.contains(key) ? row.at(key).get<T>() : fallback;
}

const std::map<char, long> kProbeParams = {{'p', 3}, {'q', 4}, {'r', 5}, {'s', 6}};

void validate_row(int table, const FixtureRow& r, int index) {
  auto where = [&] { return "row " + std::to_string(index) + " (" + r.family + " " + r.id + ")"; };
  try {
    parse_spelling(r.fixed, table == 3 ? kProbeParams : std::map<char, long>{});
  } catch (const std::exception& e) {
    throw FixtureError(where() + ": fixed spelling '" + r.fixed + "' does not canonicalize: " + e.what());
  }
  if (table == 3) {
    const Table3Row* known = nullptr;
    for (const auto& row : table3_rows())
      if (row.id == r.id) known = &row;
    if (!known) throw FixtureError(where() + ": unknown Table 3 row");
    if (known->generators != r.generators) throw FixtureError(where() + ": generators differ from the built-in row");
    if (r.speciality.empty() || r.speciality.find_first_not_of("NSV") != std::string::npos)
      throw FixtureError(where() + ": speciality must be a subset of NSV");
    return;
  }
  auto g = [&] {
    try {
      return algebra_for(r.family);
    } catch (const std::exception& e) {
      throw FixtureError(where() + ": " + e.what());
    }
  }();
  for (const auto& rec : r.generators) {
    try {
      build_recipe(*g, r.family, rec);
    } catch (const std::exception& e) {
      throw FixtureError(where() + ": recipe '" + rec + "': " + e.what());
    }
  }
  if (table == 4) {
    if (r.generators.size() != 2) throw FixtureError(where() + ": needs two generators");
    if (r.involution_type.size() != 3) throw FixtureError(where() + ": involution_type needs three labels");
    try {
      parse_speciality(r.speciality);
    } catch (const std::exception& e) {
      throw FixtureError(where() + ": " + e.what());
    }
  } else if (r.generators.size() != 1) {
    throw FixtureError(where() + ": needs one generator");
  }
}

}  // namespace

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FixtureError(path + ": " + e.what());
  }
  Fixture f;
  try {
    f.table_id = doc.at("table").get<int>();
  } catch (const json::exception&) {
    throw FixtureError(path + ": missing integer 'table'");
  }
  if (f.table_id != 1 && f.table_id != 3 && f.table_id != 4)
    throw FixtureError(path + ": table must be 1, 3 or 4");
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw FixtureError(path + ": missing 'rows' array");
  int index = 0;
  for (const auto& j : doc["rows"]) {
    FixtureRow r;
    r.family = field<std::string>(j, "family", index);
    r.id = field<std::string>(j, "id", index);
    r.generators = field<std::vector<std::string>>(j, "generators", index);
    r.fixed = field<std::string>(j, "fixed", index);
    r.provenance = field<std::string>(j, "provenance", index);
    if (f.table_id == 1) {
      r.involution_class = field<std::string>(j, "class", index);
      r.module = field<std::string>(j, "module", index);
      r.dim_p = field<int>(j, "dim_p", index);
      r.summands = field<int>(j, "summands", index);
    } else if (f.table_id == 3) {
      r.type = field<std::string>(j, "type", index);
      r.speciality = field<std::string>(j, "speciality", index);
      r.ambient = optional_field<std::string>(j, "ambient", "");
      r.gamma = optional_field<std::string>(j, "gamma", "");
    } else {
      r.involution_type = field<std::vector<std::string>>(j, "involution_type", index);
      r.speciality = field<std::string>(j, "speciality", index);
    }
    validate_row(f.table_id, r, index);
    f.rows.push_back(std::move(r));
    ++index;
  }
  if (doc.contains("berger_counts"))
    for (const auto& [k, v] : doc["berger_counts"].items())
      if (v.is_number_integer()) f.berger_counts[k] = v.get<int>();
  return f;
}

std::string default_fixture_dir() {
#ifdef KLEIN_FIXTURE_DIR
  return KLEIN_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

Fixture load_fixture(int table_id, const std::string& dir) {
  return load_fixture(dir + "/table" + std::to_string(table_id) + ".json");
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Error: return "ERROR";
    default: return "skipped";
  }
}

namespace {

struct Task {
  const FixtureRow* row;
  std::vector<int> params;  // table 3
};

void expect(RowReport& r, const std::string& what, const std::string& computed, const std::string& expected) {
  if (computed != expected) r.problems.push_back(what + ": computed " + computed + ", expected " + expected);
}

void run_table1(const FixtureRow& f, const VerifyOptions& o, RowReport& r) {
  auto g = algebra_for(f.family);
  Aut theta = build_recipe(*g, f.family, f.generators[0]);
  auto cls = involution_class(*g, f.family, theta);
  auto iso = isotropy_weights<Rational>(*g, theta, o.seed);
  r.record = {f.family, f.id, f.generators, iso.k_type.str(), {cls.label}, "", {iso.dim_k, iso.dim_p}};

  expect(r, "class", cls.label, f.involution_class);
  for (const auto& e : exceptional_catalog(f.family))
    if (e.label == cls.label) expect(r, "symmetric type", e.symmetric_type, f.id);
  expect(r, "fixed type", iso.k_type.str(), parse_spelling(f.fixed).str());
  expect(r, "dim p", std::to_string(iso.dim_p), std::to_string(f.dim_p));
  expect(r, "weyl dimension sum", std::to_string(iso.weyl_dim_sum), std::to_string(iso.dim_p));
  int summands = 0;
  std::vector<std::string> hw;
  for (const auto& h : iso.highest) {
    summands += h.multiplicity;
    hw.push_back("[" + join_ints(h.labels) + "]" + (h.multiplicity > 1 ? "x" + std::to_string(h.multiplicity) : ""));
  }
  expect(r, "irreducible summands", std::to_string(summands), std::to_string(f.summands));
  if (!iso.all_dominant) r.problems.push_back("extreme weights not dominant");
  if (!iso.bracket_ok) r.problems.push_back("[k, p] not contained in p");
  r.notes.push_back("highest weights " + join(hw, " ") + " (" + f.module + ")");
}

void run_table3(const FixtureRow& f, const std::vector<int>& params, const VerifyOptions& o, RowReport& r) {
  Table3Result t;
  try {
    t = analyze_table3(f.id, params, o.seed);
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()).find("Klein four") == std::string::npos) throw;
    r.status = RowStatus::Skipped;
    r.problems.push_back(e.what());
    return;
  }
  std::map<char, long> pm;
  for (std::size_t i = 0; i < params.size(); ++i) pm["pqrs"[i]] = params[i];
  const std::string spec = std::string(1, to_char(t.speciality));
  r.record = {t.algebra, r.id, f.generators, t.fixed_type.str(), t.involution_type, spec, t.dims};

  expect(r, "fixed type", t.fixed_type.str(), parse_spelling(f.fixed, pm).str());
  expect(r, "character dims sum", std::to_string(std::accumulate(t.dims.begin(), t.dims.end(), 0)),
         std::to_string(t.algebra_dim));
  if (t.in_range) {
    if (!type_matches(t.involution_type, f.type))
      r.problems.push_back("involution type: computed " + join(t.involution_type, "-") + ", expected " + f.type);
    if (f.speciality.find(spec) == std::string::npos)
      r.problems.push_back("speciality: computed " + spec + ", expected one of " + f.speciality);
  } else {
    r.notes.push_back("outside the classical range; type and speciality not compared");
  }
}

void run_table4(const FixtureRow& f, const VerifyOptions& o, RowReport& r) {
  auto k = analyze_klein_four(f.family, f.id, f.generators[0], f.generators[1], o.seed);
  r.record = {f.family, f.id, f.generators, k.fixed_type.str(), k.involution_type,
              std::string(1, to_char(k.speciality)), k.dims};
  expect(r, "fixed type", k.fixed_type.str(), parse_spelling(f.fixed).str());
  auto want = f.involution_type;
  std::sort(want.begin(), want.end());
  expect(r, "involution type", join(k.involution_type, "-"), join(want, "-"));
  expect(r, "speciality", r.record.speciality, f.speciality);
  const int dim_g = algebra_for(f.family)->dim();
  expect(r, "character dims sum", std::to_string(std::accumulate(k.dims.begin(), k.dims.end(), 0)),
         std::to_string(dim_g));
}

}  // namespace

VerificationReport verify_table(const Fixture& fixture, const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const auto& row : fixture.rows) {
    if (!o.family.empty() && row.family != o.family) continue;
    if (fixture.table_id == 3) {
      for (auto& ps : table3_parameters(table3_row(row.id), o.bound)) tasks.push_back({&row, ps});
    } else {
      tasks.push_back({&row, {}});
    }
  }
  VerificationReport rep;
  rep.table_id = fixture.table_id;
  rep.rows.resize(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, o.jobs))
  for (std::int64_t x = 0; x < n; ++x) {
    const auto& t = tasks[x];
    RowReport& r = rep.rows[x];
    r.family = t.row->family;
    r.id = t.row->id;
    if (!t.params.empty()) r.id += "[" + join_ints(t.params) + "]";
    r.params = t.params;
    r.provenance = t.row->provenance;
    auto start = std::chrono::steady_clock::now();
    try {
      if (fixture.table_id == 1) run_table1(*t.row, o, r);
      else if (fixture.table_id == 3) run_table3(*t.row, t.params, o, r);
      else run_table4(*t.row, o, r);
      if (r.status != RowStatus::Skipped) r.status = r.problems.empty() ? RowStatus::Pass : RowStatus::Mismatch;
    } catch (const std::exception& e) {
      r.status = RowStatus::Error;
      r.problems.push_back(e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  for (const auto& r : rep.rows) {
    switch (r.status) {
      case RowStatus::Pass: ++rep.passed; break;
      case RowStatus::Mismatch: ++rep.mismatched; break;
      case RowStatus::Error: ++rep.errors; break;
      case RowStatus::Skipped: ++rep.skipped; break;
    }
  }
  return rep;
}

std::string VerificationReport::text(bool timings) const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "table " << table_id << "  " << std::left << std::setw(4) << r.family << " " << std::setw(14) << r.id
        << " " << std::setw(8) << to_string(r.status);
    if (!r.record.fixed_type.empty()) out << " " << r.record.fixed_type;
    if (!r.record.speciality.empty()) out << "  " << r.record.speciality;
    if (timings) out << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    out << "\n";
    for (const auto& p : r.problems) out << "    " << p << "   [" << r.provenance << "]\n";
    for (const auto& n : r.notes) out << "    note: " << n << "\n";
  }
  out << "table " << table_id << ": " << passed << "/" << total() << " pass";
  if (mismatched) out << ", " << mismatched << " mismatch";
  if (errors) out << ", " << errors << " error";
  if (skipped) out << ", " << skipped << " skipped";
  out << "\n";
  return out.str();
}

std::vector<Record> records(const VerificationReport& report) {
  std::vector<Record> out;
  for (const auto& r : report.rows)
    if (r.status == RowStatus::Pass || r.status == RowStatus::Mismatch) out.push_back(r.record);
  return out;
}

namespace {

json to_json(const Record& r) {
  return json{{"family", r.family},         {"id", r.id},
              {"generators", r.generators}, {"fixed_type", r.fixed_type},
              {"involution_type", r.involution_type}, {"speciality", r.speciality},
              {"dims", r.dims}};
}

}  // namespace

std::string emit_json(const std::vector<Record>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string emit_markdown(const std::vector<Record>& rows) {
  std::ostringstream out;
  out << "| family | id | generators | fixed type | involution type | speciality | dims |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << r.family << " | " << r.id << " | " << join(r.generators, ", ") << " | " << r.fixed_type << " | "
        << join(r.involution_type, "-") << " | " << r.speciality << " | " << join_ints(r.dims, " ") << " |\n";
  return out.str();
}

std::vector<Record> parse_records_json(const std::string& text) {
  std::vector<Record> out;
  for (const auto& j : json::parse(text)) {
    Record r;
    r.family = j.at("family").get<std::string>();
    r.id = j.at("id").get<std::string>();
    r.generators = j.at("generators").get<std::vector<std::string>>();
    r.fixed_type = j.at("fixed_type").get<std::string>();
    r.involution_type = j.at("involution_type").get<std::vector<std::string>>();
    r.speciality = j.at("speciality").get<std::string>();
    r.dims = j.at("dims").get<std::vector<int>>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace klein

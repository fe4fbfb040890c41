#include "transient/catalog.hpp"

#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

namespace transient {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Homology sources

std::optional<SeifertMatrix> seifert_source(const KnotRecord& r) {
  if (r.seifert) return r.seifert;
  if (r.braid) return seifert_matrix_from_braid(*r.braid);
  return std::nullopt;
}

std::optional<GoeritzMatrix> goeritz_source(const KnotRecord& r) {
  if (!r.pd) return std::nullopt;
  return goeritz_matrix(reconstruct_diagram(*r.pd));
}

AbelianGroup record_cover_homology(const KnotRecord& r, int p) {
  if (auto v = seifert_source(r)) return cover_homology(*v, p);
  if (r.pd) {
    if (p != 2)
      throw DomainError(r.name + ": only a PD code is available, which presents the double cover "
                        "only (asked for p = " + std::to_string(p) + ")");
    return cover_homology(*goeritz_source(r), 2);
  }
  throw DomainError(r.name + ": no PD code, braid or Seifert matrix");
}

HomologyProfile record_profile(const KnotRecord& r, const std::vector<int>& ps) {
  HomologyProfile h;
  for (int p : ps) h.set(p, record_cover_homology(r, p));
  return h;
}

// ---------------------------------------------------------------------------
// Names

namespace {

struct NameKey {
  int crossings;
  std::string family;
  long long index;
};

std::optional<NameKey> parse_name(std::string_view name) {
  std::size_t i = 0;
  auto digits = [&](long long& out) {
    std::size_t start = i;
    out = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])) && i - start < 12)
      out = out * 10 + (name[i++] - '0');
    return i > start;
  };
  long long c = 0, idx = 0;
  if (!digits(c)) return std::nullopt;
  std::string family;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) family += name[i++];
  if (i >= name.size() || name[i] != '_') return std::nullopt;
  ++i;
  if (!digits(idx) || i != name.size()) return std::nullopt;
  return NameKey{static_cast<int>(c), family, idx};
}

}  // namespace

std::optional<int> crossing_number(std::string_view name) {
  if (auto k = parse_name(name)) return k->crossings;
  return std::nullopt;
}

bool knot_name_less(std::string_view a, std::string_view b) {
  auto ka = parse_name(a), kb = parse_name(b);
  if (ka && kb)
    return std::tie(ka->crossings, ka->family, ka->index) <
           std::tie(kb->crossings, kb->family, kb->index);
  if (ka != std::nullopt || kb != std::nullopt) return ka.has_value();
  return a < b;
}

// ---------------------------------------------------------------------------
// Validation

void validate_record(const KnotRecord& r) {
  if (!r.computable()) throw ValidationError("no PD code, braid or Seifert matrix");
  std::vector<std::pair<std::string, AbelianGroup>> double_covers;
  if (r.pd) double_covers.emplace_back("pd", cover_homology(*goeritz_source(r), 2));
  if (r.braid) double_covers.emplace_back("braid", cover_homology(seifert_matrix_from_braid(*r.braid), 2));
  if (r.seifert) double_covers.emplace_back("seifert", cover_homology(*r.seifert, 2));

  const auto& [first_name, first] = double_covers.front();
  for (const auto& [name, g] : double_covers)
    if (g != first)
      throw ValidationError("double cover homology disagrees between " + first_name + " (" +
                            format_group(first) + ") and " + name + " (" + format_group(g) + ")");
  if (!first.is_finite() || first.torsion_order() % 2 == 0)
    throw ValidationError("double cover homology " + format_group(first) +
                          " is not finite of odd order");
  if (r.determinant && first.torsion_order() != abs(*r.determinant))
    throw ValidationError("determinant " + r.determinant->str() +
                          " does not match |H1(double cover)| = " + first.torsion_order().str());
}

// ---------------------------------------------------------------------------
// Catalog

Catalog::Catalog(std::vector<KnotRecord> records) : records_(std::move(records)) {
  std::stable_sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
    return knot_name_less(a.name, b.name);
  });
  for (std::size_t i = 0; i < records_.size(); ++i)
    if (!index_.emplace(records_[i].name, i).second)
      throw ValidationError("catalog: duplicate knot name " + records_[i].name);
}

const KnotRecord* Catalog::query(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &records_[it->second];
}

// ---------------------------------------------------------------------------
// CSV ingestion

namespace {

const std::vector<std::string>& field_keys() {
  static const std::vector<std::string> keys{"name", "pd", "braid", "seifert",
                                             "u", "t", "det", "source"};
  return keys;
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool quoted = false;
    bool done = false;
    while (!done) {
      if (i >= text.size()) {
        if (quoted) throw ParseError("CSV: unterminated quoted field", row.line);
        row.fields.push_back(std::move(field));
        break;
      }
      char ch = text[i++];
      if (quoted) {
        if (ch == '"') {
          if (i < text.size() && text[i] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          if (ch == '\n') ++line;
          field += ch;
        }
        continue;
      }
      switch (ch) {
        case '"': quoted = true; break;
        case ',': row.fields.push_back(std::move(field)); field.clear(); break;
        case '\r': break;
        case '\n':
          ++line;
          row.fields.push_back(std::move(field));
          done = true;
          break;
        default: field += ch;
      }
    }
    if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
  }
  return rows;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// A small nonnegative integer, or an interval `[a,b]` / `a,b` which is kept
// only when a == b.
struct InvariantCell {
  std::optional<int> value;
  std::optional<std::string> note;
};

InvariantCell parse_invariant(const std::string& key, const std::string& raw) {
  std::string s = trim(raw);
  InvariantCell cell;
  if (s.empty()) return cell;
  std::string body = s;
  if (body.front() == '[' || body.front() == '{') {
    if (body.size() < 2 || (body.back() != ']' && body.back() != '}'))
      throw ValidationError(key + ": malformed value '" + s + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        item.size() > 6)
      throw ValidationError(key + ": malformed value '" + s + "'");
    parts.push_back(std::stoi(item));
  }
  if (parts.empty()) throw ValidationError(key + ": malformed value '" + s + "'");
  if (std::adjacent_find(parts.begin(), parts.end(), std::not_equal_to<>()) == parts.end()) {
    cell.value = parts.front();
  } else {
    cell.note = key + " given as interval " + s + "; omitted";
  }
  return cell;
}

}  // namespace

ColumnMap ColumnMap::parse(std::string_view text) {
  ColumnMap m;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(text.substr(pos, end - pos));
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("column map: expected key=column", pos);
      std::string key = trim(item.substr(0, eq));
      std::string col = trim(item.substr(eq + 1));
      if (std::find(field_keys().begin(), field_keys().end(), key) == field_keys().end())
        throw ParseError("column map: unknown key '" + key + "'", pos);
      if (col.empty()) throw ParseError("column map: empty column for '" + key + "'", pos);
      m.columns[key] = col;
    }
    pos = end + 1;
  }
  if (!m.columns.count("name")) throw ParseError("column map: 'name' is required", 0);
  return m;
}

ColumnMap ColumnMap::identity() {
  ColumnMap m;
  for (const auto& k : field_keys()) m.columns[k] = k;
  return m;
}

IngestResult ingest_csv(const std::filesystem::path& path, const ColumnMap& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read CSV file " + path.string());
  std::vector<CsvRow> rows;
  try {
    rows = read_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  }
  IngestResult result;
  if (rows.empty()) return result;

  const auto& header = rows.front().fields;
  std::map<std::string, std::size_t> field_at;
  for (const auto& [key, col] : columns.columns) {
    auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) { return trim(h) == col; });
    if (it == header.end())
      throw ValidationError(path.string() + ": mapped column '" + col + "' (for " + key +
                            ") not in header");
    field_at[key] = static_cast<std::size_t>(it - header.begin());
  }
  const bool identity_defaults = columns.columns.size() == field_keys().size();
  (void)identity_defaults;

  std::vector<KnotRecord> accepted;
  std::map<std::string, std::size_t> seen;
  const std::string default_source = path.filename().string();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    ++result.report.rows;
    auto cell = [&](const std::string& key) -> std::string {
      auto it = field_at.find(key);
      if (it == field_at.end() || it->second >= row.fields.size()) return {};
      return trim(row.fields[it->second]);
    };
    KnotRecord rec;
    rec.name = cell("name");
    try {
      if (rec.name.empty()) throw ValidationError("empty name");
      if (seen.count(rec.name))
        throw ValidationError("duplicate of line " + std::to_string(seen[rec.name]));
      if (auto s = cell("pd"); !s.empty()) rec.pd = parse_pd(s);
      if (auto s = cell("braid"); !s.empty()) rec.braid = parse_braid(s);
      if (auto s = cell("seifert"); !s.empty()) rec.seifert = SeifertMatrix(parse_matrix(s));
      for (const char* key : {"u", "t"}) {
        InvariantCell inv = parse_invariant(key, cell(key));
        (std::string(key) == "u" ? rec.u : rec.t) = inv.value;
        if (inv.note) result.report.notes.push_back({row.line, rec.name, *inv.note});
      }
      if (auto s = cell("det"); !s.empty()) {
        try {
          rec.determinant = BigInt(s);
        } catch (const std::exception&) {
          throw ValidationError("det: malformed value '" + s + "'");
        }
      }
      rec.source = cell("source");
      if (rec.source.empty()) rec.source = default_source;
      validate_record(rec);
    } catch (const Error& e) {
      result.report.rejected.push_back({row.line, rec.name, e.what()});
      continue;
    }
    seen[rec.name] = row.line;
    accepted.push_back(std::move(rec));
  }
  result.report.accepted = accepted.size();
  result.catalog = Catalog(std::move(accepted));
  return result;
}

// ---------------------------------------------------------------------------
// Persistence

std::string serialize_catalog(const Catalog& c) {
  std::string out;
  for (const auto& r : c.records()) {
    json j;
    j["name"] = r.name;
    j["source"] = r.source;
    if (r.pd) j["pd"] = format_pd(*r.pd);
    if (r.braid) j["braid"] = format_braid(*r.braid);
    if (r.seifert) j["seifert"] = format_matrix(r.seifert->matrix());
    if (r.u) j["u"] = *r.u;
    if (r.t) j["t"] = *r.t;
    if (r.determinant) {
      // Plain JSON number when it fits, decimal string otherwise.
      if (abs(*r.determinant) <= std::numeric_limits<std::int64_t>::max())
        j["det"] = r.determinant->convert_to<std::int64_t>();
      else
        j["det"] = r.determinant->str();
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

Catalog deserialize_catalog(std::string_view text) {
  std::vector<KnotRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      json j = json::parse(line);
      if (!j.is_object()) throw ValidationError("expected a JSON object");
      KnotRecord r;
      r.name = j.at("name").get<std::string>();
      r.source = j.value("source", std::string{});
      if (j.contains("pd")) r.pd = parse_pd(j["pd"].get<std::string>());
      if (j.contains("braid")) r.braid = parse_braid(j["braid"].get<std::string>());
      if (j.contains("seifert")) r.seifert = SeifertMatrix(parse_matrix(j["seifert"].get<std::string>()));
      if (j.contains("u")) r.u = j["u"].get<int>();
      if (j.contains("t")) r.t = j["t"].get<int>();
      if (j.contains("det"))
        r.determinant = j["det"].is_string() ? BigInt(j["det"].get<std::string>())
                                             : BigInt(j["det"].get<std::int64_t>());
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError("catalog line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return Catalog(std::move(records));
}

void persist_catalog(const Catalog& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write catalog " + path.string());
  out << serialize_catalog(c);
  if (!out) throw IoError("write failed for catalog " + path.string());
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read catalog " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return deserialize_catalog(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  }
}

}  // namespace transient

#pragma once

#include "transient/bounds.hpp"
#include "transient/covers.hpp"
#include "transient/knotcodes.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace transient {

struct KnotRecord {
  std::string name;
  std::optional<PdCode> pd;
  std::optional<BraidWord> braid;
  std::optional<SeifertMatrix> seifert;
  std::optional<int> u;
  std::optional<int> t;
  std::optional<BigInt> determinant;
  std::string source;

  bool computable() const noexcept { return pd || braid || seifert; }

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// Seifert form for covers of any order: the ingested matrix if present,
/// otherwise one built from the braid.
std::optional<SeifertMatrix> seifert_source(const KnotRecord& r);
std::optional<GoeritzMatrix> goeritz_source(const KnotRecord& r);

/// H1 of the p-fold branched cover from the record's best source. Throws
/// DomainError when no source can present that cover (e.g. PD-only records
/// for p > 2).
AbelianGroup record_cover_homology(const KnotRecord& r, int p);
HomologyProfile record_profile(const KnotRecord& r, const std::vector<int>& ps);

/// Crossing number encoded in a table name: `10_99` -> 10, `12a_427` -> 12.
std::optional<int> crossing_number(std::string_view name);

/// Table order: crossing number, then alternating before non-alternating,
/// then index. Names that do not parse sort after, lexicographically.
bool knot_name_less(std::string_view a, std::string_view b);

/// Cross-checks a record: every present source gives the same H1 of the
/// double cover, and its order matches the stated determinant. Throws
/// ValidationError naming the mismatch.
void validate_record(const KnotRecord& r);

class Catalog {
 public:
  Catalog() = default;
  /// Sorts by knot_name_less. Throws ValidationError on duplicate names.
  explicit Catalog(std::vector<KnotRecord> records);

  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// nullptr when absent.
  const KnotRecord* query(std::string_view name) const;

  friend bool operator==(const Catalog& a, const Catalog& b) { return a.records_ == b.records_; }

 private:
  std::vector<KnotRecord> records_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Which CSV column holds each field. Keys: name, pd, braid, seifert, u, t,
/// det, source. Only `name` is required.
struct ColumnMap {
  std::map<std::string, std::string> columns;

  /// `name=<col>,pd=<col>,...`. Throws ParseError on unknown keys.
  static ColumnMap parse(std::string_view text);
  /// Every key mapped to the column of the same name.
  static ColumnMap identity();
};

struct IngestIssue {
  std::size_t line = 0;
  std::string name;
  std::string message;
};

struct IngestReport {
  std::size_t rows = 0;
  std::size_t accepted = 0;
  std::vector<IngestIssue> rejected;
  std::vector<IngestIssue> notes;
};

struct IngestResult {
  Catalog catalog;
  IngestReport report;
};

/// Reads a CSV export with a header row. Rows that fail parsing or
/// validate_record land in the report; they never abort ingestion. Throws
/// IoError for an unreadable file and ValidationError when a mapped column is
/// missing from the header.
IngestResult ingest_csv(const std::filesystem::path& path, const ColumnMap& columns);

/// One JSON object per line with sorted keys; absent fields are omitted.
std::string serialize_catalog(const Catalog& c);
/// Throws ParseError carrying the 1-based line number.
Catalog deserialize_catalog(std::string_view text);

void persist_catalog(const Catalog& c, const std::filesystem::path& path);
Catalog load_catalog(const std::filesystem::path& path);

}  // namespace transient

#include "transient/cli.hpp"

#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#ifndef TRANSIENT_DATA_DIR
#define TRANSIENT_DATA_DIR "data"
#endif

namespace transient::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view kInlinePrefixes[] = {"pd:", "braid:", "seifert:"};

struct Globals {
  std::string catalog_path = std::string(TRANSIENT_DATA_DIR) + "/catalog.jsonl";
  std::string format = "text";
  std::string p_list;

  bool structured() const { return format == "structured"; }
};

ordered_json bigint_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return x.convert_to<std::int64_t>();
  return x.str();
}

ordered_json group_json(int p, const AbelianGroup& g) {
  ordered_json torsion = ordered_json::array();
  for (const auto& t : g.torsion()) torsion.push_back(bigint_json(t));
  return {{"p", p},
          {"torsion", torsion},
          {"free_rank", g.free_rank()},
          {"notation", format_cover_notation(p, g)}};
}

ordered_json lower_json(const LowerBound& b) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : b.terms) terms.push_back({{"tag", t.tag}, {"value", t.value}});
  return {{"value", b.value}, {"provenance", b.provenance}, {"terms", terms}};
}

ordered_json upper_json(const UpperBound& b) {
  ordered_json v = b.value ? ordered_json(*b.value) : ordered_json("unknown");
  return {{"value", v}, {"provenance", b.provenance}};
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string upper_text(const UpperBound& b) {
  return b.value ? std::to_string(*b.value) : std::string("unknown");
}

std::string tr_text(const BoundReport& r) {
  if (r.exact) return std::to_string(*r.exact);
  if (r.tr_upper.value)
    return std::to_string(r.tr_lower.value) + ".." + std::to_string(*r.tr_upper.value);
  return std::to_string(r.tr_lower.value) + "..unknown";
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
    pos = end + 1;
  }
  return out;
}

/// Cover orders a record can present: all of `wanted` for Seifert-backed
/// records, only p = 2 for PD-only ones.
std::vector<int> available_covers(const KnotRecord& r, const std::vector<int>& wanted) {
  if (seifert_source(r)) return wanted;
  std::vector<int> out;
  if (std::find(wanted.begin(), wanted.end(), 2) != wanted.end()) out.push_back(2);
  return out;
}

class Command {
 public:
  Command(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  const Catalog& catalog() {
    if (!catalog_) catalog_ = load_catalog(g_.catalog_path);
    return *catalog_;
  }

  /// Loads the catalog only when `ref` is not inline.
  KnotRecord knot(const std::string& ref) {
    for (auto prefix : kInlinePrefixes)
      if (ref.rfind(prefix, 0) == 0) return resolve_knot(ref, nullptr);
    return resolve_knot(ref, &catalog());
  }

  std::vector<int> covers(std::string_view fallback) {
    std::vector<int> ps = parse_cover_list(g_.p_list.empty() ? fallback : g_.p_list);
    for (int p : ps)
      if (p > kRecommendedMaxCover)
        err_ << "warning: p = " << p << " exceeds " << kRecommendedMaxCover
             << "; presentations grow as (p - 1) * genus\n";
    return ps;
  }

  void emit(const ordered_json& j) { out_ << j.dump(2) << '\n'; }

  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Catalog> catalog_;
};

// ---------------------------------------------------------------------------
// homology

void cmd_homology(Command& c, const std::string& ref) {
  KnotRecord r = c.knot(ref);
  std::vector<int> ps = c.covers("2");
  ordered_json covers = ordered_json::array();
  std::vector<std::string> lines;
  for (int p : ps) {
    AbelianGroup g = record_cover_homology(r, p);
    covers.push_back(group_json(p, g));
    lines.push_back(format_cover_notation(p, g));
  }
  if (c.g_.structured()) {
    c.emit({{"knot", r.name}, {"covers", covers}});
  } else {
    for (const auto& l : lines) c.out_ << l << '\n';
  }
}

// ---------------------------------------------------------------------------
// bounds

struct Classified {
  HomologyProfile profile;
  BoundReport report;
};

Classified classify_record(const KnotRecord& r, const std::vector<int>& ps,
                           std::optional<int> u, std::optional<int> t) {
  Classified out;
  out.profile = record_profile(r, available_covers(r, ps));
  out.report = classify(out.profile, u, t);
  return out;
}

ordered_json report_json(const std::string& name, const Classified& c) {
  ordered_json covers = ordered_json::array();
  for (const auto& [p, g] : c.profile.covers()) covers.push_back(group_json(p, g));
  const BoundReport& r = c.report;
  return {{"knot", name},
          {"covers", covers},
          {"bucket", bucket_of(r)},
          {"tr", r.exact ? ordered_json(*r.exact) : ordered_json(nullptr)},
          {"tr_lower", lower_json(r.tr_lower)},
          {"tr_upper", upper_json(r.tr_upper)},
          {"u_lower", lower_json(r.u_lower)},
          {"t_lower", lower_json(r.t_lower)},
          {"inconsistent", r.inconsistent},
          {"issues", r.issues}};
}

void print_report(std::ostream& out, const std::string& name, const Classified& c) {
  const BoundReport& r = c.report;
  out << "knot: " << name << '\n';
  for (const auto& [p, g] : c.profile.covers()) out << "cover: " << format_cover_notation(p, g) << '\n';
  out << "tr: " << tr_text(r) << '\n';
  out << "tr lower: " << r.tr_lower.value << " (" << join(r.tr_lower.provenance, ", ") << ")\n";
  out << "tr upper: " << upper_text(r.tr_upper) << " (" << join(r.tr_upper.provenance, ", ") << ")\n";
  out << "u lower: " << r.u_lower.value << " (" << join(r.u_lower.provenance, ", ") << ")\n";
  out << "t lower: " << r.t_lower.value << " (" << join(r.t_lower.provenance, ", ") << ")\n";
  for (const auto& issue : r.issues) out << "issue: " << issue << '\n';
}

void cmd_bounds(Command& c, const std::string& ref, std::optional<int> u, std::optional<int> t) {
  KnotRecord r = c.knot(ref);
  std::vector<int> wanted = c.covers("2,3,4,5,6");
  if (!c.g_.p_list.empty() && !seifert_source(r) && wanted != std::vector<int>{2})
    c.err_ << "warning: " << r.name << " has only a PD code; using p = 2\n";
  Classified cl = classify_record(r, wanted, u ? u : r.u, t ? t : r.t);
  if (cl.report.inconsistent)
    for (const auto& issue : cl.report.issues) c.err_ << "warning: " << r.name << ": " << issue << '\n';
  if (c.g_.structured()) c.emit(report_json(r.name, cl));
  else print_report(c.out_, r.name, cl);
}

// ---------------------------------------------------------------------------
// classify-table

struct Row {
  const KnotRecord* record = nullptr;
  std::optional<Classified> result;
  std::string error;
};

void classify_rows(std::vector<Row>& rows, const std::vector<int>& ps, unsigned workers) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].result = classify_record(*rows[i].record, ps, rows[i].record->u, rows[i].record->t);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

/// Tags of the cover rules that push a lower bound to 2 or more.
bool decided_by_covers(const BoundReport& r) {
  if (r.tr_lower.value < 2) return false;
  return std::any_of(r.tr_lower.provenance.begin(), r.tr_lower.provenance.end(),
                     [](const std::string& tag) {
                       return tag.rfind("thm1.2/", 0) == 0 || tag.rfind("thm1.3/", 0) == 0;
                     });
}

void cmd_classify_table(Command& c, std::optional<int> max_crossings,
                        const std::vector<int>& crossings, const std::string& names,
                        unsigned jobs) {
  const Catalog& cat = c.catalog();
  std::vector<int> ps = c.covers("2,3,4,5,6");
  std::set<std::string> wanted_names;
  for (auto& n : split(names, ',')) wanted_names.insert(n);

  std::vector<Row> rows;
  for (const auto& r : cat.records()) {
    auto cn = crossing_number(r.name);
    if (max_crossings && (!cn || *cn > *max_crossings)) continue;
    if (!crossings.empty() &&
        (!cn || std::find(crossings.begin(), crossings.end(), *cn) == crossings.end()))
      continue;
    if (!wanted_names.empty() && !wanted_names.count(r.name)) continue;
    rows.push_back({&r, std::nullopt, {}});
  }
  for (const auto& n : wanted_names)
    if (!cat.query(n)) c.err_ << "warning: " << n << " is not in the catalog\n";
  if (rows.empty()) c.err_ << "warning: no knots selected; the table is empty\n";

  classify_rows(rows, ps, jobs ? jobs : std::max(1u, std::thread::hardware_concurrency()));

  std::map<std::string_view, std::vector<const Row*>> buckets;
  std::vector<const Row*> decided;
  for (const auto& row : rows) {
    if (!row.result) {
      c.err_ << "warning: " << row.record->name << ": " << row.error << '\n';
      buckets["unknown"].push_back(&row);
      continue;
    }
    const BoundReport& r = row.result->report;
    for (const auto& issue : r.issues) c.err_ << "warning: " << row.record->name << ": " << issue << '\n';
    buckets[bucket_of(r)].push_back(&row);
    if (decided_by_covers(r)) decided.push_back(&row);
  }

  auto attaining_covers = [](const Classified& cl) {
    std::vector<std::string> out;
    for (const auto& [p, g] : cl.profile.covers()) {
      const std::string suffix = "/p=" + std::to_string(p);
      for (const auto& tag : cl.report.tr_lower.provenance)
        if ((tag.rfind("thm1.2/", 0) == 0 || tag.rfind("thm1.3/", 0) == 0) &&
            tag.size() >= suffix.size() && tag.compare(tag.size() - suffix.size(), suffix.size(), suffix) == 0) {
          out.push_back(format_cover_notation(p, g));
          break;
        }
    }
    return out;
  };

  if (c.g_.structured()) {
    ordered_json j;
    ordered_json knots = ordered_json::array();
    for (const auto& row : rows) {
      if (row.result) {
        knots.push_back(report_json(row.record->name, *row.result));
      } else {
        knots.push_back({{"knot", row.record->name}, {"bucket", "unknown"}, {"error", row.error}});
      }
    }
    ordered_json bj = ordered_json::object();
    for (auto b : kBuckets) {
      ordered_json names_j = ordered_json::array();
      for (const Row* row : buckets[b]) names_j.push_back(row->record->name);
      bj[std::string(b)] = names_j;
    }
    ordered_json dj = ordered_json::array();
    for (const Row* row : decided)
      dj.push_back({{"knot", row->record->name},
                    {"tr_lower", row->result->report.tr_lower.value},
                    {"provenance", row->result->report.tr_lower.provenance},
                    {"covers", attaining_covers(*row->result)}});
    j["covers"] = ps;
    j["buckets"] = bj;
    j["cover_decided"] = dj;
    j["knots"] = knots;
    c.emit(j);
    return;
  }

  static const std::map<std::string_view, std::string_view> titles{
      {"exact-ge2", "transient number at least 2, determined exactly"},
      {"bounded", "transient number bounded but not determined"},
      {"exact-1", "transient number 1"},
      {"exact-0", "transient number 0 (unknot)"},
      {"unknown", "no upper bound available"},
      {"inconsistent", "input data contradict the homology bounds"}};
  bool first = true;
  for (auto b : kBuckets) {
    const auto& list = buckets[b];
    if (!first) c.out_ << '\n';
    first = false;
    c.out_ << "# " << b << ": " << titles.at(b) << " (" << list.size() << ")\n";
    for (const Row* row : list) {
      c.out_ << row->record->name;
      if (row->result) {
        const BoundReport& r = row->result->report;
        c.out_ << " tr=" << tr_text(r) << " lower=" << join(r.tr_lower.provenance, ",")
               << " upper=" << join(r.tr_upper.provenance, ",");
      }
      c.out_ << '\n';
    }
  }
  c.out_ << "\n# cover-decided: lower bound 2 or more from cover homology (" << decided.size() << ")\n";
  for (const Row* row : decided) {
    c.out_ << row->record->name << " tr>=" << row->result->report.tr_lower.value << ' '
           << join(row->result->report.tr_lower.provenance, ",");
    for (const auto& g : attaining_covers(*row->result)) c.out_ << ' ' << g;
    c.out_ << '\n';
  }
}

// ---------------------------------------------------------------------------
// consum

void cmd_consum(Command& c, const std::vector<std::string>& refs, std::optional<int> n) {
  if (refs.empty() || refs.size() > 2) throw DomainError("consum: expected one or two knots");
  if (refs.size() == 2 && n) throw DomainError("consum: --n applies to a single knot");
  if (refs.size() == 1 && !n) throw DomainError("consum: give a second knot or --n");
  if (n && *n < 1) throw DomainError("consum: --n must be >= 1");

  std::vector<KnotRecord> knots;
  for (const auto& ref : refs) knots.push_back(c.knot(ref));
  const int copies = n ? *n : 1;
  // Each summand in order; a single knot with --n is repeated.
  std::vector<const KnotRecord*> summands;
  if (refs.size() == 2) summands = {&knots[0], &knots[1]};
  else summands.assign(static_cast<std::size_t>(copies), &knots[0]);

  std::vector<int> wanted = c.covers("2");
  std::vector<int> ps = wanted;
  for (const auto& k : knots) {
    auto avail = available_covers(k, ps);
    if (avail != ps) c.err_ << "warning: " << k.name << " has only a PD code; using p = 2\n";
    ps = avail;
  }
  if (ps.empty()) throw DomainError("consum: no cover order is available for every summand");

  HomologyProfile sum;
  for (int p : ps) {
    AbelianGroup acc;
    for (const auto& k : knots) {
      AbelianGroup g = record_cover_homology(k, p);
      if (refs.size() == 1)
        for (int i = 0; i < copies; ++i) acc = connected_sum_homology(acc, g);
      else
        acc = connected_sum_homology(acc, g);
    }
    sum.set(p, acc);
  }

  LowerBound lower = tr_lower_bound(sum);
  if (refs.size() == 1 && sum.find(2)) {
    const AbelianGroup g2 = record_cover_homology(knots[0], 2);
    if (!g2.is_trivial()) {
      LowerBound rep = repeated_sum_bound(g2, copies);
      for (const auto& t : lower.terms) rep.terms.push_back(t);
      // Re-settle: keep the maximum and every tag attaining it.
      LowerBound merged;
      std::set<std::string> seen;
      for (const auto& t : rep.terms) {
        if (!seen.insert(t.tag).second) continue;
        merged.terms.push_back(t);
        merged.value = std::max(merged.value, t.value);
      }
      for (const auto& t : merged.terms)
        if (t.value == merged.value && merged.value > 0) merged.provenance.push_back(t.tag);
      if (merged.provenance.empty()) merged.provenance.push_back("none");
      lower = merged;
    }
  }

  // Upper candidates.
  std::vector<BoundTerm> uppers;
  std::vector<std::optional<int>> tr_parts;
  for (const auto& k : knots) {
    Classified cl = classify_record(k, {2}, k.u, k.t);
    tr_parts.push_back(cl.report.exact);
  }
  const bool all_tr = std::all_of(tr_parts.begin(), tr_parts.end(), [](auto& v) { return v.has_value(); });
  if (all_tr) {
    int acc = *tr_parts[0];
    int steps = 0;
    for (std::size_t i = 1; i < summands.size(); ++i) {
      const int next = refs.size() == 2 ? *tr_parts[1] : *tr_parts[0];
      acc = connected_sum_upper_bound(acc, next);
      ++steps;
    }
    if (steps) uppers.push_back({"thm5.1", acc});
  }
  const bool all_u = std::all_of(knots.begin(), knots.end(), [](auto& k) { return k.u.has_value(); });
  if (all_u) {
    int total = 0;
    for (const KnotRecord* k : summands) total += *k->u;
    uppers.push_back({"upper:u-subadditive", total});
  }

  UpperBound upper;
  for (const auto& t : uppers)
    if (!upper.value || t.value < *upper.value) upper.value = t.value;
  if (upper.value) {
    for (const auto& t : uppers)
      if (t.value == *upper.value) upper.provenance.push_back(t.tag);
  } else {
    upper.provenance.push_back("none");
  }
  std::optional<int> exact;
  bool inconsistent = upper.value && lower.value > *upper.value;
  if (!inconsistent && upper.value && *upper.value == lower.value) exact = lower.value;
  if (inconsistent)
    c.err_ << "warning: lower bound " << lower.value << " exceeds upper bound " << *upper.value << '\n';

  std::string label;
  for (std::size_t i = 0; i < summands.size(); ++i) label += (i ? " # " : "") + summands[i]->name;
  if (refs.size() == 1) label = knots[0].name + " #" + std::to_string(copies);

  if (c.g_.structured()) {
    ordered_json covers = ordered_json::array();
    for (const auto& [p, g] : sum.covers()) covers.push_back(group_json(p, g));
    ordered_json candidates = ordered_json::array();
    for (const auto& t : uppers) candidates.push_back({{"tag", t.tag}, {"value", t.value}});
    c.emit({{"knot", label},
            {"summands", summands.size()},
            {"covers", covers},
            {"tr", exact ? ordered_json(*exact) : ordered_json(nullptr)},
            {"tr_lower", lower_json(lower)},
            {"tr_upper", upper_json(upper)},
            {"upper_candidates", candidates},
            {"inconsistent", inconsistent}});
    return;
  }
  c.out_ << "knot: " << label << '\n';
  for (const auto& [p, g] : sum.covers()) c.out_ << "cover: " << format_cover_notation(p, g) << '\n';
  c.out_ << "tr: "
         << (exact ? std::to_string(*exact)
                   : std::to_string(lower.value) + ".." + upper_text(upper))
         << '\n';
  c.out_ << "tr lower: " << lower.value << " (" << join(lower.provenance, ", ") << ")\n";
  c.out_ << "tr upper: " << upper_text(upper) << " (" << join(upper.provenance, ", ") << ")\n";
  for (const auto& t : uppers) c.out_ << "upper candidate: " << t.value << " (" << t.tag << ")\n";
}

// ---------------------------------------------------------------------------
// snf, lemma-check

void cmd_snf(Command& c, const std::string& text, bool certificates) {
  IntMatrix m = parse_matrix(text);
  SnfResult r = snf(m);
  if (!verify_snf(m, r)) throw Error("snf: certificate verification failed");
  AbelianGroup g = group_from_presentation(m);
  if (c.g_.structured()) {
    ordered_json diag = ordered_json::array();
    for (const auto& d : r.diagonal()) diag.push_back(bigint_json(d));
    c.emit({{"d", format_matrix(r.d)},
            {"u", format_matrix(r.u)},
            {"v", format_matrix(r.v)},
            {"diagonal", diag},
            {"cokernel", format_group(g)},
            {"verified", true}});
    return;
  }
  c.out_ << format_matrix(r.d) << '\n';
  if (certificates) {
    c.out_ << "u: " << format_matrix(r.u) << '\n';
    c.out_ << "v: " << format_matrix(r.v) << '\n';
    c.out_ << "cokernel: " << format_group(g) << '\n';
  }
}

void cmd_lemma_check(Command& c, const std::vector<long long>& a) {
  if (a.size() != 5) throw DomainError("lemma-check: expected five integers a1 a2 a3 a4 a5");
  AbelianGroup g = lemma_grupos_group(a[0], a[1], a[2], a[3], a[4]);
  AbelianGroup expected = AbelianGroup::cyclic(abs(BigInt(a[0]) - a[1]));
  const bool pass = g == expected;
  if (c.g_.structured()) {
    c.emit({{"a", a},
            {"group", format_group(g)},
            {"expected", format_group(expected)},
            {"pass", pass}});
  } else {
    c.out_ << format_group(g) << ' ' << (pass ? "PASS" : "FAIL") << '\n';
  }
}

// ---------------------------------------------------------------------------
// ingest

constexpr const char* kDefaultMap =
    "name=name,pd=pd_notation,braid=braid_notation,seifert=seifert_matrix,"
    "u=unknotting_number,t=tunnel_number,det=determinant,source=source";

void cmd_ingest(Command& c, const std::string& csv, const std::string& map) {
  IngestResult res = ingest_csv(csv, ColumnMap::parse(map));
  persist_catalog(res.catalog, c.g_.catalog_path);
  for (const auto& n : res.report.notes)
    c.err_ << "note: line " << n.line << " (" << n.name << "): " << n.message << '\n';
  for (const auto& n : res.report.rejected)
    c.err_ << "warning: rejected line " << n.line << " (" << n.name << "): " << n.message << '\n';
  if (c.g_.structured()) {
    ordered_json rejected = ordered_json::array();
    for (const auto& n : res.report.rejected)
      rejected.push_back({{"line", n.line}, {"name", n.name}, {"reason", n.message}});
    ordered_json notes = ordered_json::array();
    for (const auto& n : res.report.notes)
      notes.push_back({{"line", n.line}, {"name", n.name}, {"note", n.message}});
    c.emit({{"catalog", c.g_.catalog_path},
            {"rows", res.report.rows},
            {"accepted", res.report.accepted},
            {"rejected", rejected},
            {"notes", notes}});
    return;
  }
  c.out_ << "rows: " << res.report.rows << '\n'
         << "accepted: " << res.report.accepted << '\n'
         << "rejected: " << res.report.rejected.size() << '\n'
         << "notes: " << res.report.notes.size() << '\n'
         << "catalog: " << c.g_.catalog_path << '\n';
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view bucket_of(const BoundReport& r) {
  if (r.inconsistent) return "inconsistent";
  if (r.exact) return *r.exact >= 2 ? "exact-ge2" : *r.exact == 1 ? "exact-1" : "exact-0";
  if (r.tr_upper.value) return "bounded";
  return "unknown";
}

KnotRecord resolve_knot(std::string_view ref, const Catalog* catalog) {
  KnotRecord r;
  r.name = std::string(ref);
  r.source = "inline";
  auto body = [&](std::string_view prefix) { return ref.substr(prefix.size()); };
  if (ref.rfind("pd:", 0) == 0) {
    r.pd = parse_pd(body("pd:"));
  } else if (ref.rfind("braid:", 0) == 0) {
    r.braid = parse_braid(body("braid:"));
  } else if (ref.rfind("seifert:", 0) == 0) {
    r.seifert = SeifertMatrix(parse_matrix(body("seifert:")));
  } else {
    if (!catalog) throw ValidationError("no catalog to look up '" + r.name + "'");
    const KnotRecord* found = catalog->query(ref);
    if (!found) throw ValidationError("unknown knot '" + r.name + "'");
    return *found;
  }
  validate_record(r);
  return r;
}

std::vector<int> parse_cover_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  for (const auto& item : split(text, ',')) {
    if (item.size() > 4 || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("cover list: expected positive integers, got '" + item + "'", pos);
    int p = std::stoi(item);
    if (p < 2) throw ParseError("cover list: p must be >= 2", pos);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    pos += item.size() + 1;
  }
  if (out.empty()) throw ParseError("cover list is empty", 0);
  std::sort(out.begin(), out.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Homology of cyclic branched covers and transient-number bounds for knots",
               "knottr"};
  app.fallthrough();
  app.require_subcommand(1);
  app.footer(
      "Knot references: a catalog name (10_99), or inline pd:PD[X(1,4,2,5),...],\n"
      "braid:\"2: 1 1 1\", seifert:\"-1 1; 0 -1\".\n"
      "Examples:\n"
      "  knottr homology 10_123 --p 2,5\n"
      "  knottr homology \"braid:2: 1 1 1\"\n"
      "  knottr bounds 10_99 --format structured\n"
      "  knottr classify-table --max-crossings 10\n"
      "  knottr consum 3_1 3_1\n"
      "  knottr consum 3_1 --n 5\n"
      "  knottr snf \"2 0; 0 3\"\n"
      "  knottr lemma-check 3 0 1 1 1\n"
      "  knottr ingest --csv data/knots.csv --catalog data/catalog.jsonl");
  app.add_option("--catalog", g.catalog_path, "Catalog file (JSON lines)")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--p", g.p_list, "Comma-separated cover orders, e.g. 2,3,6");

  std::string ref;
  auto* homology = app.add_subcommand("homology", "H1 of p-fold cyclic branched covers");
  homology->add_option("knot", ref, "Knot reference")->required();

  std::optional<int> u_opt, t_opt;
  auto* bounds = app.add_subcommand("bounds", "Bounds on tr, u and t from cover homology");
  bounds->add_option("knot", ref, "Knot reference")->required();
  bounds->add_option("--u", u_opt, "Known unknotting number (overrides the catalog)");
  bounds->add_option("--t", t_opt, "Known tunnel number (overrides the catalog)");

  std::optional<int> max_crossings;
  std::vector<int> crossing_filter;
  std::string names;
  unsigned jobs = 0;
  auto* table = app.add_subcommand("classify-table", "Classify catalog knots into tr buckets");
  table->add_option("--max-crossings", max_crossings, "Only knots with at most this many crossings");
  table->add_option("--crossings", crossing_filter, "Only these crossing numbers")->delimiter(',');
  table->add_option("--names", names, "Only these comma-separated names");
  table->add_option("--jobs", jobs, "Worker threads (0: hardware concurrency)");

  std::vector<std::string> consum_refs;
  std::optional<int> copies;
  auto* consum = app.add_subcommand("consum", "Bounds for connected sums");
  consum->add_option("knots", consum_refs, "One or two knot references")->required()->expected(1, 2);
  consum->add_option("--n", copies, "Number of copies of a single knot");

  std::string matrix_text;
  bool certificates = false;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", matrix_text, "Rows separated by ';', e.g. \"2 0; 0 3\"")->required();
  snf_cmd->add_flag("--certificates", certificates, "Also print the transforms u and v");

  std::vector<long long> coeffs;
  auto* lemma = app.add_subcommand("lemma-check", "Check the cyclic-group lemma for a1..a5");
  lemma->add_option("a", coeffs, "a1 a2 a3 a4 a5")->required()->expected(5);

  std::string csv_path, map_spec = kDefaultMap;
  auto* ingest = app.add_subcommand("ingest", "Ingest a CSV export into the catalog");
  ingest->add_option("--csv", csv_path, "CSV file with a header row")->required();
  ingest->add_option("--map", map_spec, "key=column pairs")->capture_default_str();

  std::vector<const char*> argv{"knottr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Command cmd(g, out, err);
  try {
    if (*homology) cmd_homology(cmd, ref);
    else if (*bounds) cmd_bounds(cmd, ref, u_opt, t_opt);
    else if (*table) cmd_classify_table(cmd, max_crossings, crossing_filter, names, jobs);
    else if (*consum) cmd_consum(cmd, consum_refs, copies);
    else if (*snf_cmd) cmd_snf(cmd, matrix_text, certificates);
    else if (*lemma) cmd_lemma_check(cmd, coeffs);
    else if (*ingest) cmd_ingest(cmd, csv_path, map_spec);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace transient::cli

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "transient/bounds.hpp"
#include "transient/catalog.hpp"
#include "transient/cli.hpp"
#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace transient;
namespace fs = std::filesystem;

namespace {

const fs::path kCatalog = fs::path(TRANSIENT_DATA_DIR) / "catalog.jsonl";
const fs::path kTable = fs::path(TRANSIENT_TEST_DIR) / "golden" / "cover_homology_table.txt";

const std::vector<std::string> kExactTwo{"8_18",  "9_35",  "9_37",  "9_40",  "9_41",  "9_46",
                                         "9_47",  "9_48",  "9_49",  "10_74", "10_75", "10_98",
                                         "10_99", "10_103", "10_123", "10_155", "10_157"};

const std::vector<std::string> kAtMostTwo{
    "8_16",   "9_29",   "9_32",   "9_38",   "10_61",  "10_62",  "10_63",  "10_64",  "10_65",
    "10_66",  "10_67",  "10_68",  "10_69",  "10_79",  "10_80",  "10_81",  "10_83",  "10_85",
    "10_86",  "10_87",  "10_89",  "10_90",  "10_92",  "10_93",  "10_94",  "10_96",  "10_97",
    "10_100", "10_101", "10_105", "10_106", "10_108", "10_109", "10_110", "10_111", "10_112",
    "10_115", "10_116", "10_117", "10_120", "10_121", "10_122", "10_140", "10_142", "10_144",
    "10_148", "10_149", "10_150", "10_151", "10_152", "10_153", "10_154", "10_158", "10_160",
    "10_162", "10_163", "10_165"};

const std::vector<std::string> kCoverDecided{
    "10_99",   "10_123",  "12a_427", "12a_435",  "12a_465",  "12a_466", "12a_475", "12a_647",
    "12a_742", "12a_801", "12a_868", "12a_975",  "12a_990",  "12a_1019", "12a_1102", "12a_1105",
    "12a_1167", "12a_1206", "12a_1229", "12a_1288", "12n_518", "12n_533", "12n_604", "12n_605",
    "12n_642", "12n_706", "12n_840", "12n_879", "12n_888"};

// Number of prime knots with 3..10 crossings.
constexpr int kKnotsUpTo10 = 249;
constexpr int kKnotsUpTo9 = 84;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

struct TableRow {
  std::string name;
  std::vector<std::string> covers;  // literal `{p,{...}}` strings
};

std::vector<TableRow> read_table() {
  std::ifstream in(kTable);
  if (!in) throw IoError("cannot read " + kTable.string());
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    TableRow row;
    ss >> row.name;
    for (std::string g; ss >> g;) row.covers.push_back(g);
    rows.push_back(row);
  }
  return rows;
}

int cover_of(const std::string& notation) { return parse_cover_notation(notation).first; }

std::string knottr_out(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), {"--catalog", kCatalog.string()});
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

int ceil_half(int n) { return n <= 0 ? 0 : (n + 1) / 2; }

// ---------------------------------------------------------------------------

Verdict table_reproduction() {
  Verdict v;
  auto rows = read_table();
  if (rows.size() != 25) v.fail("expected 25 table rows, found " + std::to_string(rows.size()));
  for (const auto& row : rows) {
    std::string ps;
    for (const auto& g : row.covers) ps += (ps.empty() ? "" : ",") + std::to_string(cover_of(g));
    int code = 0;
    std::string out = knottr_out({"homology", row.name, "--p", ps}, code);
    std::string expected;
    for (const auto& g : row.covers) expected += g + "\n";
    if (code != 0 || out != expected) v.fail(row.name + " printed " + out);
  }
  v.detail << rows.size() << " rows";
  return v;
}

Verdict low_crossing_classification() {
  Verdict v;
  int code = 0;
  std::string out = knottr_out({"classify-table", "--max-crossings", "10", "--format", "structured"}, code);
  if (code != 0) {
    v.fail("classify-table exited with " + std::to_string(code));
    return v;
  }
  auto j = nlohmann::json::parse(out);
  auto names = [&](const char* bucket) {
    std::set<std::string> s;
    for (const auto& n : j["buckets"][bucket]) s.insert(n.get<std::string>());
    return s;
  };
  const std::set<std::string> list1(kExactTwo.begin(), kExactTwo.end());
  const std::set<std::string> list2(kAtMostTwo.begin(), kAtMostTwo.end());
  if (names("exact-ge2") != list1) v.fail("exact tr = 2 bucket differs from list (1)");
  if (names("bounded") != list2) v.fail("bounded bucket differs from list (2)");
  for (const auto& k : j["knots"]) {
    const std::string name = k["knot"];
    if (list1.count(name) && k["tr"] != 2) v.fail(name + " is not exact 2");
    if (list2.count(name) && (k["tr_lower"]["value"] != 1 || k["tr_upper"]["value"] != 2))
      v.fail(name + " is not bounded by [1,2]");
  }
  std::set<std::string> ones = names("exact-1");
  std::size_t nontrivial = 0;
  for (const auto& k : j["knots"]) {
    const std::string name = k["knot"];
    if (name == "0_1") continue;
    ++nontrivial;
    if (!list1.count(name) && !list2.count(name) && !ones.count(name)) v.fail(name + " is not tr = 1");
  }
  if (nontrivial != static_cast<std::size_t>(kKnotsUpTo10))
    v.fail("corpus has " + std::to_string(nontrivial) + " nontrivial knots, expected 249");
  for (const char* b : {"unknown", "inconsistent"})
    if (!names(b).empty()) v.fail(std::string(b) + " bucket is not empty");
  v.detail << list1.size() << " exact 2, " << list2.size() << " in [1,2], " << ones.size()
           << " tr = 1, " << names("exact-0").size() << " unknot";
  return v;
}

Verdict cover_decided() {
  Verdict v;
  const Catalog catalog = load_catalog(kCatalog);
  std::map<std::string, std::vector<int>> table_covers;
  for (const auto& row : read_table())
    for (const auto& g : row.covers) table_covers[row.name].push_back(cover_of(g));
  int via13 = 0, via12 = 0;
  for (const auto& name : kCoverDecided) {
    const KnotRecord* r = catalog.query(name);
    if (!r) {
      v.fail(name + " missing from the catalog");
      continue;
    }
    std::vector<int> ps{2};
    for (int p : table_covers[name])
      if (p != 2) ps.push_back(p);
    HomologyProfile h = record_profile(*r, ps);
    LowerBound b = tr_lower_bound(h);
    bool cited = false;
    for (const auto& tag : b.provenance) {
      if (tag == "thm1.3/p=2") {
        cited = true;
        ++via13;
        break;
      }
      for (int p : table_covers[name])
        if (tag == "thm1.2/p=" + std::to_string(p)) {
          cited = true;
          ++via12;
          break;
        }
      if (cited) break;
    }
    if (b.value != 2) v.fail(name + " lower bound " + std::to_string(b.value));
    if (!cited) v.fail(name + " provenance does not cite the table's cover");
    BoundReport rep = classify(h, std::nullopt, 2);
    if (rep.exact != 2) v.fail(name + " is not exact 2 with t = 2");
  }
  v.detail << kCoverDecided.size() << " knots (" << via13 << " via non-cyclic double cover, "
           << via12 << " via a higher cover)";
  return v;
}

Verdict cross_oracle() {
  Verdict v;
  const Catalog catalog = load_catalog(kCatalog);
  int checked = 0;
  for (const auto& r : catalog.records()) {
    auto cn = crossing_number(r.name);
    if (!cn || *cn > 9 || !r.pd || !r.braid) continue;
    ++checked;
    AbelianGroup goeritz = cover_homology(*goeritz_source(r), 2);
    SeifertMatrix braid_v = seifert_matrix_from_braid(*r.braid);
    AbelianGroup seifert = cover_homology(braid_v, 2);
    BigInt delta_at_minus_one = abs(alexander_polynomial(braid_v)(BigInt(-1)));
    if (goeritz != seifert)
      v.fail(r.name + ": Goeritz " + format_group(goeritz) + " vs Seifert " + format_group(seifert));
    if (!goeritz.is_finite() || goeritz.torsion_order() != delta_at_minus_one)
      v.fail(r.name + ": order differs from |Delta(-1)|");
    if (!r.determinant || abs(*r.determinant) != delta_at_minus_one)
      v.fail(r.name + ": catalog determinant differs from |Delta(-1)|");
  }
  if (checked != kKnotsUpTo9) v.fail("checked " + std::to_string(checked) + " knots, expected 84");
  v.detail << checked << " knots";
  return v;
}

Verdict fox_orders() {
  Verdict v;
  const Catalog catalog = load_catalog(kCatalog);
  int checked = 0, infinite = 0;
  for (const auto& r : catalog.records()) {
    auto sv = seifert_source(r);
    if (!sv) continue;
    IntPolynomial delta = alexander_polynomial(*sv);
    for (int p = 2; p <= 6; ++p) {
      ++checked;
      AbelianGroup g = cover_homology(*sv, p);
      FoxOrder f = fox_order(delta, p);
      if (f.infinite != (g.free_rank() >= 1)) v.fail(r.name + " p=" + std::to_string(p) + ": infinite flag");
      if (!f.infinite && f.order != g.torsion_order())
        v.fail(r.name + " p=" + std::to_string(p) + ": order " + g.torsion_order().str() + " vs " + f.order.str());
      if (f.infinite) ++infinite;
    }
  }
  const KnotRecord* trefoil = catalog.query("3_1");
  if (!trefoil || !fox_order(alexander_polynomial(*seifert_source(*trefoil)), 6).infinite)
    v.fail("trefoil p=6 is not infinite");
  v.detail << checked << " (knot, p) pairs, " << infinite << " infinite";
  return v;
}

Verdict snf_properties() {
  Verdict v;
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  int nonsingular = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    SnfResult r = snf(m);
    if (r.u * m * r.v != r.d) v.fail("u m v != d");
    if (abs(det(r.u)) != 1 || abs(det(r.v)) != 1) v.fail("certificate not unimodular");
    std::vector<BigInt> diag = r.diagonal();
    for (std::size_t i = 0; i < r.d.rows(); ++i)
      for (std::size_t j = 0; j < r.d.cols(); ++j)
        if (i != j && r.d(i, j) != 0) v.fail("off-diagonal entry");
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] < 0) v.fail("negative diagonal entry");
      if (i + 1 < diag.size()) {
        if (diag[i] == 0 && diag[i + 1] != 0) v.fail("zero before nonzero");
        if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) v.fail("divisibility chain broken");
      }
    }
    if (m.is_square()) {
      BigInt d = det(m);
      if (d != 0) {
        ++nonsingular;
        BigInt prod = 1;
        for (const auto& x : diag) prod *= x;
        if (prod != abs(d)) v.fail("|det| != product of diagonal");
      }
    }
    if (!verify_snf(m, r)) v.fail("verify_snf rejected its own result");
  }
  v.detail << "1000 matrices, " << nonsingular << " square nonsingular";
  return v;
}

Verdict lemma_suite() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> coeff(-20, 20);
  int accepted = 0, drawn = 0;
  while (accepted < 1000) {
    ++drawn;
    long long a[5];
    for (auto& x : a) x = coeff(rng);
    if (abs(lemma_grupos_hypothesis_det(a[0], a[1], a[2], a[3], a[4])) != 1) continue;
    ++accepted;
    AbelianGroup g = lemma_grupos_group(a[0], a[1], a[2], a[3], a[4]);
    SnfResult r = snf(lemma_grupos_presentation(a[0], a[1], a[2], a[3], a[4]));
    int non_unit = 0;
    for (const auto& d : r.diagonal())
      if (d != 1) ++non_unit;
    if (g != AbelianGroup::cyclic(abs(BigInt(a[0]) - a[1])) || non_unit > 1)
      v.fail("(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ",...) gives " + format_group(g));
  }
  v.detail << accepted << " tuples satisfying the hypothesis out of " << drawn << " drawn";
  return v;
}

Verdict connected_sums() {
  Verdict v;
  int code = 0;
  auto j = nlohmann::json::parse(knottr_out({"consum", "3_1", "3_1", "--format", "structured"}, code));
  if (code != 0 || j["tr"] != 2) v.fail("3_1 # 3_1 is not exact 2");
  if (j["covers"][0]["notation"] != "{2,{3,3}}") v.fail("3_1 # 3_1 homology");

  // The thm3.1 term is ceil((n - 1)/2) for every n. The reported bound
  // also carries the rank rules, which dominate only for n <= 3.
  const AbelianGroup z3 = AbelianGroup::cyclic(3);
  std::ostringstream small;
  for (int n = 1; n <= 20; ++n) {
    LowerBound b = repeated_sum_bound(z3, n);
    const std::string tag = "thm3.1/n=" + std::to_string(n);
    auto term = std::find_if(b.terms.begin(), b.terms.end(), [&](const BoundTerm& t) { return t.tag == tag; });
    if (term == b.terms.end() || term->value != ceil_half(n - 1)) v.fail(tag + " term");
    const int reported = repeated_sum_lower_bound(z3, n);
    if (n >= 4 && reported != ceil_half(n - 1)) v.fail("n=" + std::to_string(n) + " reported " + std::to_string(reported));
    if (n <= 3) small << (n > 1 ? "," : "") << reported;
  }
  if (small.str() != "1,2,2") v.fail("n = 1..3 reported " + small.str());
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      if (connected_sum_upper_bound(a, b) != a + b + 1) v.fail("upper bound grid");
  v.detail << "thm3.1 term = ceil((n-1)/2) for n = 1..20; reported bound for n = 1..3 is " << small.str()
           << " (rank rules); 36 grid points";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cover homology table", table_reproduction},
      {2, "classification up to 10 crossings", low_crossing_classification},
      {3, "knots decided by cover homology", cover_decided},
      {4, "Goeritz / Seifert / determinant cross-check", cross_oracle},
      {5, "Fox orders for p = 2..6", fox_orders},
      {6, "Smith normal form properties", snf_properties},
      {7, "cyclic-group lemma", lemma_suite},
      {8, "connected sums", connected_sums},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << v.detail.str() << "; " << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  return failures == 0 ? 0 : 1;
}

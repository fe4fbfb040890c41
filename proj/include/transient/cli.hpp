#pragma once

#include "transient/catalog.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace transient::cli {

/// Runs `knottr` with `args` (the program name excluded). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 iff no
/// command-level error occurred.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bucket names used by classify-table, in output order.
inline constexpr std::string_view kBuckets[] = {"exact-ge2", "bounded",      "exact-1",
                                                "exact-0",   "unknown",      "inconsistent"};

/// Bucket for one classified knot.
std::string_view bucket_of(const BoundReport& r);

/// Resolves `pd:...`, `braid:...` and `seifert:...` inline references; any
/// other text is looked up in `catalog`. Throws ValidationError for an
/// unknown name or an inline record that fails validate_record.
KnotRecord resolve_knot(std::string_view ref, const Catalog* catalog);

/// Comma-separated cover orders, each >= 2. Throws ParseError.
std::vector<int> parse_cover_list(std::string_view text);

}  // namespace transient::cli

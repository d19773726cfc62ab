#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "apolar/bounds.hpp"
#include "apolar/field_spec.hpp"

namespace apolar::cli {

inline constexpr const char* kToolName = "apolar";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Json, Tsv, Pretty };

struct SessionConfig {
  FieldSpec field;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t budget = 16;
  std::string cache_path;
  OutputFormat format = OutputFormat::Pretty;
};

// $APOLAR_CACHE if set, else "apolar_bounds.json" in the working directory.
std::string default_cache_path();

// Reads a bound-table file. An empty file is an empty table; entries whose
// certificate fails re-verification are dropped with a line on `warnings`.
// Throws CorruptCache on malformed content and Error when the file cannot be read.
BoundTable cache_load(const std::string& path, std::ostream& warnings);

// Merges verified entries into the file at `path` (created if absent), keeping
// per (e, r) the smallest bound, and rewrites it atomically. Returns the
// merged table.
BoundTable cache_merge_store(const std::string& path, const std::vector<FBoundEntry>& entries,
                             std::ostream& warnings);

// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar::cli

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "apolar/cli.hpp"

namespace apolar::cli {

namespace {

std::string utc_now() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string default_cache_path() {
  if (const char* env = std::getenv("APOLAR_CACHE"); env && *env) return env;
  return "apolar_bounds.json";
}

BoundTable cache_load(const std::string& path, std::ostream& warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open cache file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  BoundTable table;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return table;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw CorruptCache(ex.what(), ex.byte);
  }
  if (!doc.is_array()) throw CorruptCache("expected a JSON array of bound entries", 0);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    FBoundEntry entry;
    try {
      entry = bound_entry_from_json(doc[i]);
    } catch (const Error& ex) {
      throw CorruptCache("entry " + std::to_string(i) + ": " + ex.what(), i);
    }
    if (auto why = verify_entry(entry); !why.empty()) {
      warnings << "warning: dropping cached entry e=" << entry.e << " r=" << entry.r << ": " << why << "\n";
      continue;
    }
    table.merge(std::move(entry));
  }
  return table;
}

BoundTable cache_merge_store(const std::string& path, const std::vector<FBoundEntry>& entries,
                             std::ostream& warnings) {
  BoundTable table;
  if (std::filesystem::exists(path)) table = cache_load(path, warnings);
  const std::string stamp = utc_now();
  for (auto entry : entries) {
    if (auto why = verify_entry(entry); !why.empty()) {
      warnings << "warning: refusing unverified entry e=" << entry.e << " r=" << entry.r << ": " << why << "\n";
      continue;
    }
    if (entry.timestamp.empty()) entry.timestamp = stamp;
    table.merge(std::move(entry));
  }

  auto doc = nlohmann::ordered_json::array();
  for (const auto& entry : table.entries()) doc.push_back(to_json(entry));
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file '" + tmp + "'");
    out << doc.dump(2) << "\n";
    if (!out) throw Error("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot replace cache file '" + path + "': " + ec.message());
  return table;
}

}  // namespace apolar::cli

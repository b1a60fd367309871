#pragma once

#include "sav132/enumeration.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sav132::cli {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "SAV132_CACHE_DIR";

/// Bumped whenever the on-disk row layout changes.
inline constexpr int kCacheFormatVersion = 1;
/// Bumped whenever the classification logic changes; part of the file name.
inline constexpr int kCheckVersion = 1;

enum class Subcommand { Table, Series, Verify, Construct, Asym };
enum class Format { Tsv, Json, Bfile, Text };

struct RunConfig {
  Subcommand subcommand = Subcommand::Table;
  int n = 0;
  int n_max = 12;
  int b = 0;
  std::string variant;
  std::string alpha;
  bool inverse = false;
  std::string gf = "sav132";
  int order = 64;
  Format format = Format::Text;
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool unsafe_n = false;
};

/// One JSON file per (n, check version) holding a row of the brute table.
class RowCache {
public:
  explicit RowCache(std::filesystem::path dir);

  std::filesystem::path path_for(int n) const;
  /// Empty when the file is missing, unreadable, or written by another format version.
  std::optional<std::vector<std::uint64_t>> load(int n) const;
  void store(int n, const std::vector<std::uint64_t>& row) const;

private:
  std::filesystem::path dir_;
};

/// brute_table, reading and filling the cache when one is given.
ClassTable cached_brute_table(int n_max, const EnumerationOptions& options, const RowCache* cache);

/// Runs an already-parsed configuration. Throws on invalid input.
int execute(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name), runs the subcommand, and writes
/// its output to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sav132::cli

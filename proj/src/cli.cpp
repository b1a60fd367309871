#include "sav132/cli.hpp"

#include "sav132/asymptotics.hpp"
#include "sav132/constructors.hpp"
#include "sav132/series.hpp"
#include "sav132/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace sav132::cli {

RowCache::RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path RowCache::path_for(int n) const {
  return dir_ / ("brute_row_n" + std::to_string(n) + "_check" + std::to_string(kCheckVersion) + ".json");
}

std::optional<std::vector<std::uint64_t>> RowCache::load(int n) const {
  std::ifstream in(path_for(n));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (j.at("check_version").get<int>() != kCheckVersion || j.at("n").get<int>() != n) return std::nullopt;
    auto row = j.at("counts").get<std::vector<std::uint64_t>>();
    if (row.size() != static_cast<std::size_t>(n) + 1) return std::nullopt;
    return row;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void RowCache::store(int n, const std::vector<std::uint64_t>& row) const {
  std::filesystem::create_directories(dir_);
  nlohmann::ordered_json j;
  j["format_version"] = kCacheFormatVersion;
  j["check_version"] = kCheckVersion;
  j["n"] = n;
  j["counts"] = row;
  // Write-then-rename so a concurrent reader never sees a partial file.
  const auto target = path_for(n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

ClassTable cached_brute_table(int n_max, const EnumerationOptions& options, const RowCache* cache) {
  ClassTable table = [&] {
    if (n_max > kMaxTableN && !options.unsafe)
      throw GuardError("brute_table: n = " + std::to_string(n_max) + " exceeds the guard " +
                       std::to_string(kMaxTableN) + "; pass --unsafe-n to run anyway");
    return ClassTable(n_max);
  }();
  for (int n = 1; n <= n_max; ++n) {
    if (cache) {
      if (auto row = cache->load(n)) {
        table.set_row(n, std::move(*row));
        continue;
      }
    }
    auto row = classify_row(n, options);
    if (cache) cache->store(n, row);
    table.set_row(n, std::move(row));
  }
  return table;
}

namespace {

const std::map<std::string, Format> kFormats{
    {"tsv", Format::Tsv}, {"json", Format::Json}, {"bfile", Format::Bfile}, {"text", Format::Text}};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::optional<RowCache> make_cache(const RunConfig& config) {
  if (config.cache_dir) return RowCache(*config.cache_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return RowCache(env);
  return std::nullopt;
}

EnumerationOptions enumeration_options(const RunConfig& config) { return {config.jobs, config.unsafe_n}; }

std::string pad_table(const ClassTable& table) {
  std::istringstream in(table.to_tsv());
  std::vector<std::vector<std::string>> cells;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
      row.push_back(line.substr(start, tab - start));
    row.push_back(line.substr(start));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += "  ";
      text += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  }
  return os.str();
}

int run_table(const RunConfig& config, std::ostream& out) {
  auto cache = make_cache(config);
  const ClassTable table = cached_brute_table(config.n_max, enumeration_options(config), cache ? &*cache : nullptr);
  table.validate();
  switch (config.format) {
    case Format::Tsv: out << table.to_tsv(); break;
    case Format::Json: out << table.to_json() << '\n'; break;
    case Format::Bfile: out << table.to_bfile(); break;
    case Format::Text: out << pad_table(table); break;
  }
  return 0;
}

PowerSeries select_series(const std::string& name, int order) {
  if (name == "sav132") return sav132(order);
  if (name == "sav312") return sav312(order);
  return component_series(parse_component(name), order);
}

int run_series(const RunConfig& config, std::ostream& out) {
  const PowerSeries f = select_series(config.gf, config.order);
  switch (config.format) {
    case Format::Tsv: out << to_tsv(f); break;
    case Format::Json: out << to_json(f, config.gf) << '\n'; break;
    case Format::Bfile: out << to_bfile(f); break;
    case Format::Text: {
      out << config.gf << " (order " << f.order() << "):";
      for (const auto& c : f.coeffs()) out << ' ' << c;
      out << '\n';
      break;
    }
  }
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  if (config.order < config.n_max) throw UsageError("--order must be at least --n-max");
  auto cache = make_cache(config);
  const auto options = enumeration_options(config);
  // The table is checked against everything else, so build it without
  // trusting its own structural assertions to short-circuit the report.
  const ClassTable table = cached_brute_table(config.n_max, options, cache ? &*cache : nullptr);
  const auto results = verify_all(table, VerifyOptions{config.n_max, config.order, options});
  if (config.format == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json j{{"name", r.name}, {"detail", r.detail}, {"passed", r.passed()}};
      if (r.failure) {
        j["n"] = r.failure->n;
        if (r.failure->k) j["k"] = *r.failure->k;
        j["expected"] = r.failure->expected;
        j["got"] = r.failure->got;
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
  } else {
    out << format_report(results);
  }
  for (const auto& r : results)
    if (!r.passed()) return 1;
  return 0;
}

int run_construct(const RunConfig& config, std::ostream& out) {
  if (config.n < 2) throw UsageError("construct needs --n >= 2");
  if (config.alpha.empty()) throw UsageError("construct needs --alpha");
  const Variant variant = config.variant.empty() ? variant_for(config.n, config.b) : parse_variant(config.variant);
  const ConstructionParams params{config.n, config.b, variant, Permutation::parse(config.alpha), config.inverse};
  const Permutation p = build(params);
  const Permutation sq = square(p);
  const int k = cycle_length_of(p, p.size());
  const bool strong = strongly_avoids_132(p);
  if (config.format == Format::Json) {
    nlohmann::ordered_json j;
    j["n"] = params.n;
    j["b"] = params.b;
    j["variant"] = variant_name(variant);
    j["inverse"] = params.take_inverse;
    j["one_line"] = std::vector<int>(p.one_line().begin(), p.one_line().end());
    j["cycles"] = cycle_decomposition(p).to_string();
    j["square"] = std::vector<int>(sq.one_line().begin(), sq.one_line().end());
    j["cycle_length_of_n"] = k;
    j["strongly_avoids_132"] = strong;
    out << j.dump() << '\n';
  } else {
    out << "one-line: " << p << '\n'
        << "cycles: " << cycle_decomposition(p).to_string() << '\n'
        << "square: " << sq << '\n'
        << "cycle length of n: " << k << '\n'
        << "strongly avoids 132: " << (strong ? "yes" : "no") << '\n';
  }
  return 0;
}

int run_asym(const RunConfig& config, std::ostream& out) {
  if (config.order < config.n_max) throw UsageError("--order must be at least --n-max");
  const auto report = asymptotic_report(config.n_max, config.order);
  if (config.format == Format::Json)
    out << to_json(report) << '\n';
  else
    out << to_text(report);
  return 0;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out) {
  switch (config.subcommand) {
    case Subcommand::Table: return run_table(config, out);
    case Subcommand::Series: return run_series(config, out);
    case Subcommand::Verify: return run_verify(config, out);
    case Subcommand::Construct: return run_construct(config, out);
    case Subcommand::Asym: return run_asym(config, out);
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of permutations strongly avoiding 132", "sav132"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string cache_dir;

  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--jobs", config.jobs, "Worker threads for enumeration")->check(CLI::Range(1, 256));
    sub->add_option("--cache-dir", cache_dir, std::string("Cache directory (default: $") + kCacheDirEnv + ")");
    sub->add_flag("--unsafe-n", config.unsafe_n, "Allow sizes above the enumeration guards");
  };

  auto* table = app.add_subcommand("table", "Brute-force a(n,k) table by cycle length of n");
  table->add_option("--n-max", config.n_max, "Largest n")->check(CLI::PositiveNumber);
  table->add_option("--format", config.format, "tsv, json, bfile or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  add_enumeration(table);

  auto* series = app.add_subcommand("series", "Generating function coefficients");
  series->add_option("--gf", config.gf, "sav132, sav312, a1, a2, a3, b, a_ge4 or d")
      ->check(CLI::IsMember({"sav132", "sav312", "a1", "a2", "a3", "b", "a_ge4", "d"}));
  series->add_option("--order", config.order, "Truncation order")->check(CLI::NonNegativeNumber);
  series->add_option("--format", config.format, "tsv, json, bfile or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify", "Cross-check every formula against brute force");
  verify->add_option("--n-max", config.n_max, "Largest n for brute-force checks")->check(CLI::PositiveNumber);
  verify->add_option("--order", config.order, "Truncation order for series identities")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", config.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  add_enumeration(verify);

  auto* construct = app.add_subcommand("construct", "Build a strong avoider with n in a long cycle");
  construct->add_option("--n", config.n, "Size")->required();
  construct->add_option("--b", config.b, "Position of n")->required();
  construct->add_option("--variant", config.variant, "form1 or form2 (default: chosen from n, b)")
      ->check(CLI::IsMember({"form1", "form2"}));
  construct->add_option("--alpha", config.alpha, "132-avoiding seed in one-line form")->required();
  construct->add_flag("--inverse", config.inverse, "Emit the inverse of the construction");
  construct->add_option("--format", config.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* asym = app.add_subcommand("asym", "Asymptotic ratios and growth");
  asym->add_option("--n-max", config.n_max, "Largest n")->check(CLI::PositiveNumber);
  asym->add_option("--order", config.order, "Truncation order")->check(CLI::NonNegativeNumber);
  asym->add_option("--format", config.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  // Per-subcommand defaults that differ from RunConfig's.
  table->preparse_callback([&](std::size_t) { config.format = Format::Tsv; });
  series->preparse_callback([&](std::size_t) { config.format = Format::Bfile; });
  asym->preparse_callback([&](std::size_t) { config.n_max = 64; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (*table) config.subcommand = Subcommand::Table;
  else if (*series) config.subcommand = Subcommand::Series;
  else if (*verify) config.subcommand = Subcommand::Verify;
  else if (*construct) config.subcommand = Subcommand::Construct;
  else config.subcommand = Subcommand::Asym;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;

  try {
    return execute(config, out);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sav132::cli

#pragma once

// Command implementations behind the qdiv binary: each command produces a
// canonical JSON document; CSV and plain-text renderings are derived from
// it. Results can be memoized in an append-only JSON-lines cache keyed by a
// canonical argument string, so a cache hit replays the stored JSON byte for
// byte.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "qdiv/admissibility.hpp"
#include "qdiv/classification.hpp"
#include "qdiv/isomorphism.hpp"

namespace qdiv::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);  // throws on unknown

struct RunConfig {
  Int z = -1;
  std::int64_t bound = 50;
  std::size_t limit = 20;
  Format format = Format::Json;
  std::string cache_path;  // empty = caching disabled
  bool reduce = false;
  std::string family = "f";  // ptilde | p1 | p2 | f

  // Validates z as square-free != 0, 1; throws std::invalid_argument.
  SquareFreeInt checked_z() const;
};

class ResultCache {
 public:
  explicit ResultCache(std::string path);  // loads existing records

  std::optional<std::string> lookup(const std::string& key) const;
  void append(const std::string& op, const std::string& key,
              const std::string& result_json);

 private:
  std::string path_;
  std::map<std::string, std::string> entries_;
};

using Json = nlohmann::ordered_json;

Json fields_json(const SquareFreeInt& z, std::size_t limit);
Json skewfields_json(const SquareFreeInt& z, std::size_t limit, bool reduce);
Json is_division_json(const SquareFreeInt& z, const Triple& c,
                      std::int64_t bound);
Json iso_json(const SquareFreeInt& z, const Triple& c, const Triple& d);
Json nucleus_json(const SquareFreeInt& z, const Triple& c);
Json family_json(const SquareFreeInt& z, const std::string& family,
                 std::size_t limit);
Json norm_test_json(const SquareFreeInt& z, const SquareFreeInt& w);
Json structure_json(const SquareFreeInt& z, const Triple& c);
Json audit_json(std::int64_t z_max, std::int64_t w_max, std::int64_t bound);

// 0 on success, 1 when the command's verdict is negative (refuted triple,
// non-isomorphic pair, non-norm, failing audit).
int exit_code_for(const std::string& op, const Json& payload);

std::string render(const std::string& op, const Json& payload, Format format);

// "qdiv/<version>|<op>|<canonical args>".
std::string cache_key(const std::string& op, const std::string& args);

// Computes (or replays) the canonical JSON text for the given key.
std::string run_cached(ResultCache* cache, const std::string& op,
                       const std::string& key,
                       const std::function<Json()>& compute);

struct CmdOutcome {
  int exit_code = 0;
  std::string output;     // rendered in the requested format
  std::string json_text;  // canonical JSON, cache-stable
};

// End-to-end execution of one subcommand with caching and rendering.
// `op` is one of: fields, skewfields, is-division, iso, nucleus, family,
// norm-test, structure, audit.
CmdOutcome run_command(const RunConfig& cfg, const std::string& op,
                       const std::optional<Triple>& c,
                       const std::optional<Triple>& d,
                       const std::optional<Int>& w,
                       std::optional<std::int64_t> z_max = std::nullopt,
                       std::optional<std::int64_t> w_max = std::nullopt);

}  // namespace qdiv::cli

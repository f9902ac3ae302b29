#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fb/error.hpp"
#include "fb/onedim.hpp"

namespace fb {

inline constexpr const char* kReportVersion = "1";

// A parsed .fbr problem file.
struct ProblemFile {
  RingPtr ring;
  std::string module_kind;  // coker or quotient
  SubmodulePresentation module;
  std::optional<std::vector<std::vector<Polynomial>>> minprimes;
  std::optional<std::vector<std::uint64_t>> localmult;
  // Normalized re-serialization: comments, spacing and coefficient
  // representatives do not change it.
  std::string canonical;
  std::string digest;  // SHA-256 of `canonical`, lowercase hex
};

// Line-oriented grammar, '#' comments:
//   char: p / vars: a, b / ideal: f, g / module: coker [e11, e12; e21, e22]
//   or module: quotient g1, g2 / rowdegs: d1, d2 / minprimes: (f, g); (h)
//   localmult: m1, m2
// Throws ParseError (with line and column), Error(NotHomogeneous) or
// Error(InconsistentBlocks).
ProblemFile parse_problem(std::string_view text);

std::string sha256_hex(std::string_view data);

struct RunFlags {
  std::optional<std::size_t> idx;
  unsigned emax = 3;
  std::optional<std::size_t> steps;
  bool exact = false;
  std::optional<Degree> degree_bound;
  std::size_t threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t seed = 1;
  std::size_t max_gb_size = 100000;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"resolve", "hk", "beta", "mu", "diagnose1", "syz", "verify"};
  return names;
}

// Runs one command and returns the report envelope
// {version, command, input_digest, ring, result, timing, warnings}.
nlohmann::json run(const std::string& command, const ProblemFile& problem, const RunFlags& flags);

// CSV table e,q,raw,normalized of a sequence result; nullopt when the
// result carries no levels.
std::optional<std::string> csv_table(const nlohmann::json& result);

// Process exit code for an error kind: 2 input, 3 inapplicable, 4 resource
// bound, 1 otherwise.
int exit_code(ErrorKind kind);

// Content-addressed cache: <dir>/<digest>/<kind>.dat with a versioned
// header and a payload checksum. cache_get throws Error(CacheCorrupt) on a
// damaged entry; cache_put writes a temporary file and renames it.
std::optional<std::string> cache_get(const std::filesystem::path& dir, const std::string& digest,
                                     const std::string& kind);
void cache_put(const std::filesystem::path& dir, const std::string& digest, const std::string& kind,
               const std::string& payload);

std::string serialize_resolution(const MinimalResolution& res);
MinimalResolution deserialize_resolution(const RingPtr& ring, std::string_view text);

}  // namespace fb

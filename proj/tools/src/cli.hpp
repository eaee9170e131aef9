#pragma once

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "areawalk/laurent.hpp"

namespace areawalk::cli {

enum class Format { csv, json, pretty };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultFormulaCap = 28;

struct RunConfig {
  std::string command;
  std::optional<int> length;
  std::optional<std::int64_t> line;
  std::optional<std::int64_t> only_t;
  std::optional<Format> format;
  std::string out_path;
  std::string suite = "all";
  std::vector<std::pair<int, int>> ps{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3}};
  int max_n = 10;
  unsigned threads = 0;
  int brute_cap = 14;
  int dp_cap = 40;
  int formula_cap = kDefaultFormulaCap;
  std::string method = "all";
  std::string walk;
};

/// Bad flags, caps exceeded or inconsistent arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "40 + 12(Q^-2+Q^2)": constant first, then symmetric pairs by |t|.
/// Polynomials that are not palindromic are written term by term.
std::string render_pretty(const AreaPolynomial& p);

/// Parses "1:2,2:3" into (p, s) pairs.
std::vector<std::pair<int, int>> parse_ps_list(const std::string& text);

/// Thread count from AREAWALK_THREADS, 0 (all cores) when unset.
unsigned threads_from_env();

int cmd_gf(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_walk(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_rep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: args excludes the program name. Output goes to out
/// unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace areawalk::cli

#ifndef WAGNER_FORGE_CLI_HPP
#define WAGNER_FORGE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wf::cli {

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitGate = 2;       // resource or scope gate
inline constexpr int kExitMalformed = 3;
inline constexpr int kExitStructural = 4;  // weakness violation

struct VerifyOptions {
  int max_level = 2;
  int lasso_u = 4;
  int lasso_v = 4;
  uint64_t seed = 0;
  int trials = 100;
  int gate_states = 10;
  long long budget_ms = -1;  // < 0 means unlimited
};

int cmd_build(const std::string& class_name, const std::string& out_dir,
              std::ostream& out, std::ostream& err);

int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err);

/// report_path may be empty (report printed to `out` only).
int cmd_verify(const VerifyOptions& opt, const std::string& report_path,
               std::ostream& out, std::ostream& err);

/// Report text of a verify run, without writing files.  Used for the
/// determinism contract: equal options must yield byte-identical reports.
std::string verify_report_text(const VerifyOptions& opt, int* exit_code);

int cmd_export(const std::string& path, bool dot, const std::string& out_path,
               std::ostream& out, std::ostream& err);

}  // namespace wf::cli

#endif

#pragma once

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace licol::tests {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the packaged CLI with `args`, capturing stdout; stderr is dropped.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LICOL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace licol::tests

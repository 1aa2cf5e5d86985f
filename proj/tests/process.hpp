#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace spheretri::testing {

struct ProcessResult {
  int exit_code = -1;
  std::string output;  // stdout, plus stderr when the command redirects it
};

inline ProcessResult run_command(const std::string& command) {
  ProcessResult r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string cli(const std::string& args) { return std::string(SPHERETRI_CLI_PATH) + " " + args; }

}  // namespace spheretri::testing

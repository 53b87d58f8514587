#ifndef PUMSIM_TEST_SUPPORT_HPP
#define PUMSIM_TEST_SUPPORT_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "pumsim/array_config.hpp"

namespace pumtest {

// 128 x 512, single array.
inline pumsim::ArrayConfig baseline() {
  return pumsim::ArrayConfig{};
}

// 512 parallel arrays: the system the batching and utilization studies use.
inline pumsim::ArrayConfig evaluation_system() {
  pumsim::ArrayConfig config;
  config.num_arrays = 512;
  return config;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs a raw shell command, capturing stdout.
inline CliResult run_shell(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Runs the CLI with the given argument string, capturing stdout.
inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  return run_shell(std::string(PUMSIM_CLI_PATH) + " " + args +
                   (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

inline std::string data_dir() {
  return PUMSIM_DATA_DIR;
}

}  // namespace pumtest

#endif  // PUMSIM_TEST_SUPPORT_HPP

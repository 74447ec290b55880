// Minimal popen wrapper for driving the CLI binary from tests.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testutil {

struct command_result {
    int exit_code = -1;
    std::string output;  // stdout only, unless the command redirects
};

inline command_result run_command(const std::string& command) {
    command_result res;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + command);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        res.exit_code = WEXITSTATUS(status);
    return res;
}

inline std::string cli_path() {
    const char* p = std::getenv("POWSER_CLI");
    if (!p || !*p)
        throw std::runtime_error("POWSER_CLI environment variable not set");
    return p;
}

}  // namespace testutil

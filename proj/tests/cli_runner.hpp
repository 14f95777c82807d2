#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace cli {

struct Run {
    int exit_code = -1;
    std::string out;
};

// Runs the qboost binary with `args` through the shell, capturing stdout.
inline Run run(const std::string& args) {
    const std::string command = std::string(QBOOST_CLI_PATH) + " " + args + " 2>/dev/null";
    Run result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace cli

// Subcommands of the command-line tool.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cotilt/report.hpp"

namespace cotilt {

struct Options {
    std::string command;
    std::vector<std::string> args;  // positional: theorem name or example id
    std::string algebra_file;
    std::string example;
    std::string module;
    std::string u;
    std::string complex_file;
    Format format = Format::Human;
    std::uint64_t seed = 0;
    int cap_res = 10;
};

// Runs one subcommand, prints its report and returns the exit code:
// 0 computed or verified, 1 verification failure, 2 input error.
int run_command(const Options& o, std::ostream& out);

bool is_input_error(Errc c);

}  // namespace cotilt

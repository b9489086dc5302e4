#include <iostream>
#include <string>
#include <vector>

#include "homcalc/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    homcalc::CommandResult r = homcalc::run_command(args);
    std::cout << r.body;
    std::cerr << r.diagnostics;
    return r.exit_code;
}

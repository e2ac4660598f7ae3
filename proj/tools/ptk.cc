#include <iostream>
#include <string>
#include <vector>

#include "ptk/cli.hh"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ptk::run_command(args, std::cout, std::cerr);
}

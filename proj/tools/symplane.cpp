#include <iostream>

#include "symplane/cli/command_line.hpp"

int main(int argc, char** argv) {
    return symplane::cli::run_command_line({argv, argv + argc}, std::cout, std::cerr);
}

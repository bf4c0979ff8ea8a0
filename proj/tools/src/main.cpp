#include <iostream>
#include <string>
#include <vector>

#include "nlsphere_cli/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return nlsphere::cli::main(args, std::cout, std::cerr);
}

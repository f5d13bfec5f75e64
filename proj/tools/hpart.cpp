#include <iostream>
#include <string>
#include <vector>

#include "hpart/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hpart::cli::main(args, std::cout, std::cerr);
}

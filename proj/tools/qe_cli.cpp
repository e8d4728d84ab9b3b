#include "qe/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qe::run_cli(args, std::cout, std::cerr);
}

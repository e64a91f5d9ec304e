#include <iostream>
#include <string>
#include <vector>

#include "aomoto/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return aomoto::execute_command(args, std::cout, std::cerr);
}

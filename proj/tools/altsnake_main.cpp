#include <iostream>
#include <string>
#include <vector>

#include "altsnake/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return altsnake::runCli(args, std::cin, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "saxl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return saxl::dispatch(args, std::cout, std::cerr);
}

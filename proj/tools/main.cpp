#include <iostream>
#include <string>
#include <vector>

#include <dyckchains/commands.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dyck::run_cli(args, std::cout, std::cerr);
}

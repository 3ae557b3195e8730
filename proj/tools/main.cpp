#include <iostream>

#include <k3hilb/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return k3hilb::cli::run(args, std::cout, std::cerr);
}

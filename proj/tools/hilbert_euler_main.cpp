#include <iostream>
#include <string>
#include <vector>

#include <hilbert_euler/cli.hpp>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return hilbert_euler::cli::run(args, std::cout, std::cerr);
}

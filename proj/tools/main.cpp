#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> tol;
    if (const char* env = std::getenv("CL30_TOL")) tol = env;
    return cl30::cli::run(args, std::cout, std::cerr, tol);
}

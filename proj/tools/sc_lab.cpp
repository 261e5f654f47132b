#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sclab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_budget;
    if (const char* v = std::getenv("SC_LAB_BUDGET"))
        env_budget = v;
    return sclab::cli::execute(args, std::cout, std::cerr, env_budget);
}

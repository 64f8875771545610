#include <iostream>

#include "adjx/cli.hpp"

int main(int argc, char** argv)
{
    return adjx::cli::run(argc, argv, std::cout, std::cerr);
}

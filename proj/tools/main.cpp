#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    return trifree::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}

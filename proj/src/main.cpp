#include "qtilt/cli_io.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return qtilt::cli::run(argc, argv, std::cout, std::cerr);
}

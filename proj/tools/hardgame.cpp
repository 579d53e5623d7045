#include <iostream>

#include "hardgame/cli.hpp"

int main(int argc, char** argv) {
    return hardgame::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

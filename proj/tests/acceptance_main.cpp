#include <cstdlib>
#include <iostream>

#include "radio/acceptance.hpp"

int main(int argc, char** argv) {
    int threads = 1;
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 1) threads = 1;
    return radio::run_acceptance(std::cout, threads) == 0 ? 0 : 1;
}

#include <cstdio>

#include "qca/automata.hpp"

int main() {
    std::puts("qca: subcommands not wired up yet");
    return 1;
}

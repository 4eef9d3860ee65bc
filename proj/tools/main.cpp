#include <cstdio>

int main() {
    std::puts("zetaforge CLI: not wired up yet");
    return 0;
}

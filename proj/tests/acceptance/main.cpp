#include <cstring>
#include <iostream>

#include "acceptance/acceptance.hpp"

int main(int argc, char** argv) {
    bool quiet = argc > 1 && std::strcmp(argv[1], "--quiet") == 0;
    int failed = 0;
    for (const auto& r : gcfloer::acceptance::run_all()) {
        std::cout << gcfloer::acceptance::summary_line(r) << "\n";
        if (!quiet)
            for (const auto& d : r.details) std::cout << "      " << d << "\n";
        failed += !r.pass;
    }
    std::cout << (9 - failed) << "/9 criteria pass\n";
    return failed ? 1 : 0;
}

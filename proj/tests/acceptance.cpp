#include "qe/verify.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    bool details = argc > 1 && std::string(argv[1]) == "--details";
    int failed = 0;
    for (const qe::CriterionResult& r : qe::run_acceptance()) {
        std::cout << qe::format_verdict(r) << "\n";
        if (details)
            for (const std::string& d : r.details)
                std::cout << "    " << d << "\n";
        failed += !r.pass;
    }
    std::cout << (11 - failed) << "/11 criteria pass\n";
    return failed == 0 ? 0 : 1;
}

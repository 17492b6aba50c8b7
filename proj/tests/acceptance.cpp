#include <chrono>
#include <iostream>

#include "faulhaber/verify.hpp"

int main()
{
    using clock = std::chrono::steady_clock;
    int failures = 0;
    for (unsigned id = 1; id <= 13; ++id) {
        const auto start = clock::now();
        const faulhaber::CheckResult r = faulhaber::run_criterion(id);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << r.title << " (" << ms
                  << " ms)";
        if (!r.pass) {
            std::cout << "  -- " << r.detail;
            ++failures;
        }
        if (!r.note.empty())
            std::cout << "  [erratum: " << r.note << "]";
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}

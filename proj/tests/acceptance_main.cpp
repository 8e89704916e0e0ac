#include <cstdio>
#include <cstring>

#include "msf/acceptance.hpp"

int main(int argc, char** argv) {
    msf::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    }
    std::vector<msf::CriterionResult> results = msf::run_acceptance(opt);
    for (const msf::CriterionResult& r : results)
        std::printf("%s  (%.1fs)\n", msf::format_result_line(r).c_str(),
                    r.seconds);
    bool ok = msf::all_pass(results);
    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return ok ? 0 : 1;
}

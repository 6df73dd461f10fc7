#include <iostream>
#include <string>
#include <vector>

#include "ringlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool want_json = false;
    for (const std::string& a : args)
        if (a == "--json") want_json = true;
    ringlab::CliResult res = ringlab::run_command(args);
    if (want_json || res.text.empty())
        std::cout << res.report.dump(2) << "\n";
    else
        std::cout << res.text;
    return res.exit_code;
}

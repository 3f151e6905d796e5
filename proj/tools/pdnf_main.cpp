#include "pdnf/errors.hpp"
#include "pdnf/problem.hpp"
#include "pdnf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare-Dulac normal forms, resonance lattices and integrability checks"};
    std::string input_path;
    std::string output_path;
    std::optional<int> order;
    std::optional<int> res_bound;
    std::optional<std::string> mode;
    bool isochore = false;
    bool print_only = false;
    app.add_option("input", input_path, "Problem file (standard input when omitted or '-')");
    app.add_option("--order", order, "Truncation order M (>= 2)")->check(CLI::Range(2, 1000));
    app.add_option("--res-bound", res_bound, "Resonance enumeration bound (>= 1)")->check(CLI::Range(1, 1000));
    app.add_option("--mode", mode, "normalize | resonance-only | integrability | isochore | simultaneous");
    app.add_flag("--isochore", isochore, "Volume-preserving normalization");
    app.add_option("--output", output_path, "Write the report here instead of standard output");
    app.add_flag("--print", print_only, "Print the parsed problem in canonical form and exit");
    CLI11_PARSE(app, argc, argv);

    try {
        pdnf::ProblemSpec spec = pdnf::parse_problem(read_input(input_path));
        if (order) spec.order = *order;
        if (res_bound) spec.res_bound = *res_bound;
        if (mode) {
            auto m = pdnf::parse_mode(*mode);
            if (!m) throw pdnf::Error(pdnf::ErrorKind::InvalidArgument, "unknown mode '" + *mode + "'");
            spec.mode = *m;
        }
        if (isochore) spec.isochore = true;

        const std::string out = print_only ? pdnf::format_problem(spec) : pdnf::run_to_string(spec);
        if (output_path.empty()) {
            std::cout << out;
        } else {
            std::ofstream f(output_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + output_path);
            f << out;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

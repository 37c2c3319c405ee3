#include <string>
#include <vector>

#include "specgraph/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return specgraph::io::run(args);
}

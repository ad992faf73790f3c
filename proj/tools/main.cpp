#include <vector>

#include "geoconn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return geoconn::cli_main(args);
}

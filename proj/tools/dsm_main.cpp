#include "dsm/cli.hpp"

int main(int argc, char** argv) {
    return dsm::run_cli(argc, argv);
}

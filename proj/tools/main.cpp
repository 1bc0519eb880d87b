#include "commands.hpp"

int main(int argc, char** argv) {
    return greenradio::cli::run_cli(argc, argv);
}

#include "coarse/cli.hpp"

int main(int argc, char** argv)
{
    return coarse::cli::run(argc, argv);
}

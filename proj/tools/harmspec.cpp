#include <harmspec/cli.hpp>

int main(int argc, char** argv)
{
    return harmspec::cli::run(argc, argv);
}

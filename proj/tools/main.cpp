#include "commands.hpp"

int main(int argc, char** argv) { return cover::cli::run(argc, argv); }

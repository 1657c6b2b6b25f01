#include "tabula/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
	return tabula::run_cli(argc, argv, std::cout, std::cerr);
}

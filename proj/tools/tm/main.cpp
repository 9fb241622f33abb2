#include <iostream>

#include <sumij/sumij.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  sumij::install();
  return tmat::cli::run(argc, argv, tmat::FamilyRegistry::global(), tmat::GroupRegistry::global(), std::cout,
                        std::cerr);
}

#include "quon/cli.hpp"

int main(int argc, char** argv) {
  return quon::cli::run(argc, argv);
}

#include "nwfs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nwfs::cli_dispatch(args, std::cout, std::cerr);
}

#include <iostream>

int main(int argc, char** argv) {
  // placeholder until the CLI lands
  (void)argc;
  (void)argv;
  std::cerr << "ktcalc: not yet wired\n";
  return 64;
}

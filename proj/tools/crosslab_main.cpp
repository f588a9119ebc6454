#include <cstdio>

// Command-line front end; subcommands are wired up in stages as the library
// modules land.  For now: usage only.
int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "crosslab: no subcommands available yet\n");
  return 2;
}

#include <cstdio>

int main() {
  std::puts("posemosaic: CLI not wired up yet");
  return 1;
}

#include <cstdio>

int main() {
  std::puts("dsgen: not wired up yet");
  return 0;
}

#include <cstdio>

int main() {
  std::puts("phk: cli under construction");
  return 0;
}

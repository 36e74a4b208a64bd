// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <cstdio>

int main() {
  std::fprintf(stderr, "graspkit: command line interface under construction\n");
  return 2;
}

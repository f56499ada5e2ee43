#include "memos/experiments.hpp"
int main() { return 0; }

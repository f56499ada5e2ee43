#include "memos/experiments.hpp"
#include "memos/report.hpp"
int main() { return 0; }

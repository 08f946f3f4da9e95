#include <iostream>

#include "hyalba/alba.hpp"
#include "hyalba/syntax.hpp"

int main() {
  auto r = hyalba::run(hyalba::parse("[]p -> p"));
  if (!r.ok()) return 1;
  std::cout << hyalba::print(r.pure.at(0)) << "\n";
  return 0;
}

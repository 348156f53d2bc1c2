// Full verification battery: one line per criterion, nonzero exit on failure.
#include <cstdlib>
#include <iostream>

#include "qsk/verify.hpp"

int main(int argc, char** argv) {
  unsigned seed = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 0;
  bool ok = true;
  for (const qsk::Criterion& cr : qsk::criteria()) {
    std::string detail;
    bool pass = false;
    try {
      pass = cr.run(detail, seed);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    ok = ok && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << cr.id << ": " << cr.title
              << " — " << detail << std::endl;
  }
  return ok ? 0 : 1;
}

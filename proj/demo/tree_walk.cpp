// Walks the first three generations of the triple tree and prints each
// node with its path, generator pair and class.

#include "pptkit/pptkit.hpp"

#include <iostream>

int main() {
  using namespace pptkit;
  TreeWalker walker(2);
  while (auto node = walker.next()) {
    StPair p = st_from_ppt(node->triple);
    std::cout << "gen " << node->path.size() + 1 << "  path " << path_string(node->path)
              << "  " << node->triple.to_string() << "  s=" << p.s() << " t=" << p.t()
              << "  class " << class_char(classify(node->triple)) << '\n';
  }
  return 0;
}

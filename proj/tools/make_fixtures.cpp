// Writes the shipped data documents into the given directory.
#include <fstream>
#include <iostream>

#include "arithcs/document.hpp"
#include "arithcs/fixtures.hpp"

using namespace arithcs;

namespace {

void write(const std::string& dir, const std::string& file, const Document& doc) {
  std::ofstream out(dir + "/" + file, std::ios::binary);
  out << doc.serialize();
  if (!out) throw std::runtime_error("cannot write " + file);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 64;
  }
  const std::string dir = argv[1];
  for (const auto& [file, doc] : fixtures::documents()) write(dir, file, doc);
  return 0;
}

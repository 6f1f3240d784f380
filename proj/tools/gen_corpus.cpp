#include <filesystem>
#include <iostream>

#include "hopfcat/corpus_files.hpp"

// Writes the corpus documents into the directory given on the command line.
int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <directory>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& [file, doc] : hopfcat::corpus::documents()) {
    hopfcat::write_text_file((dir / file).string(), hopfcat::serialize_document(doc));
    std::cout << file << "\n";
  }
  return 0;
}

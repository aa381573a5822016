#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "transguard/token.h"

namespace transguard::testing {

inline std::filesystem::path fixture_dir() { return TRANSGUARD_FIXTURE_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& relative) { return read_file(fixture_dir() / relative); }

inline Language language_of(const std::filesystem::path& path) {
  return path.extension() == ".py" ? Language::kPython : Language::kJava;
}

// Regular files under `relative` with a .java or .py extension, sorted.
inline std::vector<std::filesystem::path> source_files(const std::string& relative) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(fixture_dir() / relative)) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".java" || ext == ".py")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace transguard::testing

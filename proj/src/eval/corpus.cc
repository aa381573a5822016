#include <fstream>
#include <map>
#include <sstream>

#include "transguard/eval.h"
#include "transguard/parser.h"
#include "transguard/pre_rules.h"

namespace transguard {

namespace fs = std::filesystem;

namespace {

struct CategoryName {
  Category category;
  std::string_view label;
  std::string_view title;
};

constexpr CategoryName kCategoryNames[] = {
    {Category::kAdditionalContext, "AdditionalContext", "Additional Context"},
    {Category::kLoopConversion, "LoopConversion", "Loop Conversion"},
    {Category::kTypeSensitivity, "TypeSensitivity", "Type Sensitivity"},
    {Category::kExtraConstraints, "ExtraConstraints", "Extra Constraints"},
    {Category::kMiscellaneous, "Miscellaneous", "Miscellaneous Errors"},
    {Category::kMostlyCorrect, "MostlyCorrect", "(Mostly) Correct"},
};

std::optional<std::string> read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void scan(const fs::path& dir, std::string_view ext, Language language, std::map<std::string, CorpusCase>& cases,
          std::vector<std::string>& warnings) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    const fs::path& path = entry.path();
    if (!entry.is_regular_file()) continue;
    if (path.extension() != ext) {
      warnings.push_back(path.string() + ": ignored (expected " + std::string(ext) + ")");
      continue;
    }
    auto text = read_text(path);
    if (!text) {
      warnings.push_back(path.string() + ": unreadable");
      continue;
    }
    try {
      parse_source(*text, language);
    } catch (const Error& e) {
      warnings.push_back(path.string() + ": " + e.what());
    }
    std::string id = path.stem().string();
    CorpusCase& c = cases[id];
    c.id = id;
    (language == Language::kJava ? c.java_path : c.python_path) = path;
  }
}

void read_labels(const fs::path& path, std::map<std::string, CorpusCase>& cases, std::vector<std::string>& warnings) {
  auto text = read_text(path);
  if (!text) return;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(*text);
  } catch (const nlohmann::json::exception& e) {
    warnings.push_back(path.string() + ": " + e.what());
    return;
  }
  if (!doc.is_object()) {
    warnings.push_back(path.string() + ": expected an object keyed by case id");
    return;
  }
  for (const auto& [id, entry] : doc.items()) {
    auto it = cases.find(id);
    if (it == cases.end()) {
      warnings.push_back(path.string() + ": labels for unknown case '" + id + "'");
      continue;
    }
    if (!entry.is_object()) continue;
    if (entry.contains("focal") && entry["focal"].is_string()) it->second.focal = entry["focal"].get<std::string>();
    for (auto direction : {Direction::kJ2P, Direction::kP2J}) {
      std::string key(to_string(direction));
      if (!entry.contains(key)) continue;
      auto& set = it->second.labels[direction];
      for (const auto& label : entry[key]) {
        try {
          set.insert(category_from_string(label.get<std::string>()));
        } catch (const std::exception& e) {
          warnings.push_back(path.string() + ": case '" + id + "': " + e.what());
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(Category category) {
  for (const auto& c : kCategoryNames) {
    if (c.category == category) return c.label;
  }
  return "?";
}

std::string_view display_name(Category category) {
  for (const auto& c : kCategoryNames) {
    if (c.category == category) return c.title;
  }
  return "?";
}

Category category_from_string(std::string_view text) {
  for (const auto& c : kCategoryNames) {
    if (c.label == text || c.title == text) return c.category;
  }
  throw Error(ErrorKind::kConfig, "unknown category '" + std::string(text) + "'");
}

const std::vector<Category>& all_categories() {
  static const std::vector<Category> all = [] {
    std::vector<Category> v;
    for (const auto& c : kCategoryNames) v.push_back(c.category);
    return v;
  }();
  return all;
}

Corpus ingest(const fs::path& root) {
  Corpus corpus;
  std::map<std::string, CorpusCase> cases;
  scan(root / "java", ".java", Language::kJava, cases, corpus.warnings);
  scan(root / "python", ".py", Language::kPython, cases, corpus.warnings);
  if (cases.empty()) throw Error(ErrorKind::kEmptyCorpus, "no java/*.java or python/*.py files under " + root.string());
  read_labels(root / "labels.json", cases, corpus.warnings);
  for (auto& [id, c] : cases) corpus.cases.push_back(std::move(c));
  std::sort(corpus.warnings.begin(), corpus.warnings.end());
  return corpus;
}

MockFixtures fixtures_from_corpus(const Corpus& corpus) {
  MockFixtures fixtures;
  for (const auto& c : corpus.cases) {
    if (!c.java_path || !c.python_path) continue;
    auto java = read_text(*c.java_path);
    auto python = read_text(*c.python_path);
    if (!java || !python) continue;
    try {
      fixtures.add_pair(*java, *python, c.focal);
    } catch (const Error&) {
      // Unparseable pair; ingest already warned.
    }
  }
  return fixtures;
}

}  // namespace transguard

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "transguard/parser.h"
#include "transguard/pre_rules.h"
#include "transguard/render.h"
#include "transguard/translator.h"
#include "transguard/visit.h"

namespace transguard {

namespace {

struct ProfileName {
  MockProfile profile;
  std::string_view name;
};

constexpr ProfileName kProfileNames[] = {
    {MockProfile::kIdentity, "identity"},
    {MockProfile::kPerfect, "perfect"},
    {MockProfile::kAdditionalContext, "additional_context"},
    {MockProfile::kLoopConversion, "loop_conversion"},
    {MockProfile::kTypeSensitivity, "type_sensitivity"},
    {MockProfile::kExtraConstraints, "extra_constraints"},
    {MockProfile::kMiscellaneous, "miscellaneous"},
    {MockProfile::kCollapseImport, "collapse_import"},
    {MockProfile::kCollapseNumber, "collapse_number"},
    {MockProfile::kCollapseComma, "collapse_comma"},
    {MockProfile::kCollapseSpacetoken, "collapse_spacetoken"},
    {MockProfile::kTable1, "table1"},
};

const MethodUnit* focal_of(const SyntaxUnit& unit, std::string_view focal) {
  auto named = unit.methods_named(focal);
  return named.size() == 1 ? named[0] : nullptr;
}

bool enabled(MockProfile profile, MockProfile category) {
  return profile == category || profile == MockProfile::kTable1;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

// Collapse texts shaped like the published screenshots.

std::string import_spam(Language target, const std::string& module, std::mt19937_64& rng) {
  std::vector<std::string> lines;
  int n = 3 + static_cast<int>(rng() % 4);
  if (target == Language::kPython) {
    lines.push_back("def import ( ) :");
    for (int i = 0; i < n; ++i) {
      std::string line = "\timport " + module + " , " + module;
      int extra = static_cast<int>(rng() % 4);
      for (int k = 0; k < extra; ++k) line += " , " + std::string(k % 2 ? "tuple" : module);
      lines.push_back(line);
    }
  } else {
    for (int i = 0; i < n; ++i) lines.push_back("import java . util . " + module + " ;");
  }
  return join_lines(lines);
}

std::string number_spam(Language target, std::mt19937_64& rng) {
  int n = 16 + static_cast<int>(rng() % 16);
  std::string nums = target == Language::kJava ? "- 1" : "3 , 7 , 11";
  std::string fill = target == Language::kJava ? "0" : "14";
  for (int i = 0; i < n; ++i) nums += " , " + fill;
  if (target == Language::kJava) return "static int [ ] f_gold ( ) {\n\treturn new int [ ] { " + nums + "\n";
  return "def test_count ( ) :\n\tn_success = 0\n\tparam0 = [ ]\n\tsample = [ " + nums + "\n";
}

std::string comma_spam(Language target, std::mt19937_64& rng) {
  int n = 10 + static_cast<int>(rng() % 10);
  std::string out = target == Language::kJava ? "static " : "def ";
  for (int i = 0; i < n; ++i) out += "','";
  return out + "\n";
}

std::string spacetoken_spam(Language target, const MethodUnit* focal, std::mt19937_64& rng) {
  std::vector<std::string> words = {target == Language::kJava ? "static" : "def"};
  words.push_back(focal ? focal->name : "f");
  words.push_back("(");
  if (focal) {
    for (const auto& p : focal->params) words.push_back(p.name);
  }
  words.push_back(")");
  int n = 3 + static_cast<int>(rng() % 4);
  std::string out = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (n > 0 && (rng() % 2 == 0 || words.size() - i <= static_cast<std::size_t>(n))) {
      out += " SPACETOKEN";
      --n;
    }
    out += " " + words[i];
  }
  for (; n > 0; --n) out += " SPACETOKEN";
  return out + (target == Language::kPython ? " :\n" : " {\n");
}

const Stmt* first_while(const Block& body) {
  const Stmt* found = nullptr;
  for_each_stmt(body, [&](const Stmt& s) {
    if (!found && s.kind == StmtKind::kWhile && !s.cond.empty()) found = &s;
  });
  return found;
}

// Appends a clause to the first while condition of the translation, the
// "n+1 conditions" pattern.
std::string inject_clause(const std::string& text, Language target, std::mt19937_64& rng) {
  SyntaxUnit unit;
  try {
    unit = parse_source(text, target, ParseOptions{.lenient = true});
  } catch (const Error&) {
    return text;
  }
  if (unit.methods().empty()) return text;
  const Stmt* loop = first_while(unit.methods()[0]->body);
  if (!loop) return text;
  std::string var = "x";
  for (const auto& clause : loop->cond.clauses) {
    auto it = std::find_if(clause.begin(), clause.end(), [](const Token& t) { return t.is_identifier(); });
    if (it != clause.end()) {
      var = it->text;
      break;
    }
  }
  static const char* kTemplates[] = {"( {} % 10 == 0 )", "( {} > 0 )", "( {} != 1 )", "( {} % 2 == 0 )"};
  std::string extra = kTemplates[rng() % 4];
  extra.replace(extra.find("{}"), 2, var);
  bool python = target == Language::kPython;
  std::string op = loop->cond.op == LogicalOp::kOr ? (python ? " or " : " || ") : (python ? " and " : " && ");
  Span last = covering_span(loop->cond.clauses.back());
  std::string out = text;
  out.insert(last.end, op + extra);
  return out;
}

// Cuts the translation off after an operator or opening bracket, the way a
// length-limited decoder stops mid-expression.
std::string truncate(const std::string& text, Language target) {
  TokenRun tokens;
  try {
    tokens = tokenize(text, target, LexOptions{.lenient = true});
  } catch (const Error&) {
    return text;
  }
  std::erase_if(tokens, [](const Token& t) { return t.is_marker() || t.is_comment(); });
  if (tokens.empty()) return text;
  std::size_t from = tokens.size() * 2 / 5;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.is("(") || t.is("[") || (t.kind == TokenKind::kOperator && !t.is(")") && !t.is("]") && !t.is(";") &&
                                   !t.is("}") && !t.is("{") && !t.is(":") && !t.is(","))) {
      return text.substr(0, t.span.end) + "\n";
    }
  }
  return text.substr(0, tokens[from].span.end) + " (\n";
}

class MockTranslator : public Translator {
 public:
  explicit MockTranslator(MockOptions options) : options_(std::move(options)) {}

  TranslatorKind kind() const override { return TranslatorKind::kMock; }

  std::string translate(const std::string& text, Direction direction) const override {
    if (options_.profile == MockProfile::kIdentity) return text;
    Language target = target_language(direction);
    std::string key = canonical_key(text, direction, options_.focal);
    std::mt19937_64 rng(fnv1a(key, fnv1a(std::to_string(options_.seed) + "/" +
                                         std::string(to_string(options_.profile)))));
    const MethodUnit* focal = nullptr;
    SyntaxUnit unit;
    try {
      unit = parse_source(text, source_language(direction), ParseOptions{.lenient = true});
      focal = focal_of(unit, options_.focal);
    } catch (const Error&) {
    }

    switch (options_.profile) {
      case MockProfile::kCollapseImport: return import_spam(target, "numpy", rng);
      case MockProfile::kCollapseNumber: return number_spam(target, rng);
      case MockProfile::kCollapseComma: return comma_spam(target, rng);
      case MockProfile::kCollapseSpacetoken: return spacetoken_spam(target, focal, rng);
      default: break;
    }

    MockTriggers triggers = mock_triggers(text, direction, options_.focal);
    MockProfile p = options_.profile;
    if (enabled(p, MockProfile::kAdditionalContext) && triggers.additional_context) {
      return spacetoken_spam(target, focal, rng);
    }
    if (enabled(p, MockProfile::kLoopConversion) && triggers.complex_loop) return import_spam(target, "inspect", rng);
    if (enabled(p, MockProfile::kTypeSensitivity) && triggers.array_type) {
      return direction == Direction::kJ2P ? import_spam(target, "numpy", rng) : number_spam(target, rng);
    }

    const std::string* truth = options_.fixtures ? options_.fixtures->find(direction, text, options_.focal) : nullptr;
    if (!truth) throw Error(ErrorKind::kFixtureMiss, "no fixture translation for key '" + key.substr(0, 60) + "'");
    std::string out = *truth;
    if (enabled(p, MockProfile::kExtraConstraints) && triggers.while_loop && direction == Direction::kP2J) out = inject_clause(out, target, rng);
    if (enabled(p, MockProfile::kMiscellaneous) && triggers.library_call) out = truncate(out, target);
    return out;
  }

 private:
  MockOptions options_;
};

}  // namespace

std::string_view to_string(TranslatorKind kind) {
  switch (kind) {
    case TranslatorKind::kSubprocess: return "subprocess";
    case TranslatorKind::kHttp: return "http";
    case TranslatorKind::kMock: return "mock";
  }
  return "?";
}

std::string_view to_string(MockProfile profile) {
  for (const auto& p : kProfileNames) {
    if (p.profile == profile) return p.name;
  }
  return "?";
}

MockProfile mock_profile_from_string(std::string_view text) {
  if (text == "all") return MockProfile::kTable1;
  for (const auto& p : kProfileNames) {
    if (p.name == text) return p.profile;
  }
  throw Error(ErrorKind::kConfig, "unknown mock profile '" + std::string(text) + "'");
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string canonical_key(std::string_view source, Direction direction, std::string_view focal) {
  Language language = source_language(direction);
  try {
    SyntaxUnit unit = parse_source(source, language, ParseOptions{.lenient = true});
    PreConfig config;
    config.direction = direction;
    config.focal = std::string(focal);
    config.lenient = true;
    return normalize_spacing(apply_pre(unit, config).text, language);
  } catch (const Error&) {
    return normalize_spacing(source, language);
  }
}

MockTriggers mock_triggers(std::string_view text, Direction direction, std::string_view focal) {
  MockTriggers t;
  Language language = source_language(direction);
  SyntaxUnit unit;
  try {
    unit = parse_source(text, language, ParseOptions{.lenient = true});
  } catch (const Error&) {
    return t;
  }
  const MethodUnit* m = focal_of(unit, focal);
  if (!m) return t;
  t.additional_context = extract_focal(unit, focal).record.applicable;
  for_each_stmt(m->body, [&](const Stmt& s) {
    if (language == Language::kJava && s.kind == StmtKind::kFor && detect_complex_for(s)) t.complex_loop = true;
    if (s.kind == StmtKind::kWhile) t.while_loop = true;
  });
  if (direction == Direction::kJ2P) {
    t.array_type = std::any_of(m->params.begin(), m->params.end(), [](const Param& p) { return p.array_dims > 0; });
  } else {
    t.array_type = rename_arr_params(*m, "arr[0-9]*", 2).record.applicable;
  }
  for_each_run(m->body, [&](const TokenRun& run) {
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
      if ((run[i].text == "Math" || run[i].text == "math") && run[i + 1].is(".")) t.library_call = true;
    }
  });
  return t;
}

void MockFixtures::add(Direction direction, std::string_view source, std::string translation,
                       std::string_view focal) {
  table_[{direction, canonical_key(source, direction, focal)}] = std::move(translation);
}

void MockFixtures::add_pair(std::string_view java, std::string_view python, std::string_view focal) {
  auto focal_text = [&](std::string_view text, Language language) {
    SyntaxUnit unit = parse_source(text, language, ParseOptions{.lenient = true});
    return extract_focal(unit, focal).text;
  };
  add(Direction::kJ2P, java, focal_text(python, Language::kPython), focal);
  add(Direction::kP2J, python, focal_text(java, Language::kJava), focal);
}

const std::string* MockFixtures::find(Direction direction, std::string_view source, std::string_view focal) const {
  auto it = table_.find({direction, canonical_key(source, direction, focal)});
  return it == table_.end() ? nullptr : &it->second;
}

MockFixtures MockFixtures::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot open fixture file " + path);
  MockFixtures fixtures;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    for (const auto& entry : doc) {
      fixtures.add(direction_from_string(entry.at("direction").get<std::string>()),
                   entry.at("source").get<std::string>(), entry.at("translation").get<std::string>(),
                   entry.value("focal", std::string("f_gold")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, path + ": " + e.what());
  }
  return fixtures;
}

std::unique_ptr<Translator> mock_translator(MockOptions options) {
  return std::make_unique<MockTranslator>(std::move(options));
}

}  // namespace transguard

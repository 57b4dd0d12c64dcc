#include "lcsoc/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "lcsoc/error.hpp"
#include "lcsoc/expr.hpp"

namespace lcsoc {

namespace {

struct Value {
  enum class Kind { Int, String, IntList, StringList, EmptyList } kind;
  std::int64_t num = 0;
  std::string str;
  std::vector<std::int64_t> nums;
  std::vector<std::string> strs;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw ConfigError(origin + ":" + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = std::stoll(s);
  return true;
}

// one scalar: integer or double-quoted string (no escapes)
bool parse_scalar(const std::string& s, Value& out) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    std::string body = s.substr(1, s.size() - 2);
    if (body.find('"') != std::string::npos) return false;
    out.kind = Value::Kind::String;
    out.str = body;
    return true;
  }
  std::int64_t n;
  if (parse_int(s, n)) {
    out.kind = Value::Kind::Int;
    out.num = n;
    return true;
  }
  return false;
}

Value parse_value(const std::string& origin, int line, const std::string& raw) {
  Value v;
  if (!raw.empty() && raw.front() == '[') {
    if (raw.back() != ']') fail(origin, line, "unterminated list value");
    std::string body = trim(raw.substr(1, raw.size() - 2));
    if (body.empty()) {
      v.kind = Value::Kind::EmptyList;
      return v;
    }
    std::vector<Value> items;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string item = trim(comma == std::string::npos ? body.substr(pos)
                                                         : body.substr(pos, comma - pos));
      Value iv;
      if (!parse_scalar(item, iv))
        fail(origin, line, "list item '" + item + "' is not an integer or a string");
      items.push_back(iv);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    bool all_int = true, all_str = true;
    for (const auto& it : items) {
      all_int = all_int && it.kind == Value::Kind::Int;
      all_str = all_str && it.kind == Value::Kind::String;
    }
    if (all_int) {
      v.kind = Value::Kind::IntList;
      for (const auto& it : items) v.nums.push_back(it.num);
    } else if (all_str) {
      v.kind = Value::Kind::StringList;
      for (const auto& it : items) v.strs.push_back(it.str);
    } else {
      fail(origin, line, "list mixes integers and strings");
    }
    return v;
  }
  if (!parse_scalar(raw, v))
    fail(origin, line, "value '" + raw + "' is not an integer, \"string\", or [list]");
  return v;
}

int to_int(const std::string& origin, int line, const std::string& key, const Value& v) {
  if (v.kind != Value::Kind::Int)
    fail(origin, line, "key '" + key + "' expects an integer");
  return static_cast<int>(v.num);
}

std::string to_str(const std::string& origin, int line, const std::string& key,
                   const Value& v) {
  if (v.kind != Value::Kind::String)
    fail(origin, line, "key '" + key + "' expects a \"string\"");
  return v.str;
}

std::vector<std::string> to_str_list(const std::string& origin, int line,
                                     const std::string& key, const Value& v) {
  if (v.kind == Value::Kind::EmptyList) return {};
  if (v.kind != Value::Kind::StringList)
    fail(origin, line, "key '" + key + "' expects a list of strings");
  return v.strs;
}

std::vector<int> to_int_list(const std::string& origin, int line, const std::string& key,
                             const Value& v) {
  if (v.kind == Value::Kind::EmptyList) return {};
  if (v.kind != Value::Kind::IntList)
    fail(origin, line, "key '" + key + "' expects a list of integers");
  std::vector<int> out;
  for (auto n : v.nums) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace

ScenarioSpec spec_from_config_text(const std::string& text, const std::string& origin) {
  ScenarioSpec spec;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw_line;
  int line = 0;
  while (std::getline(in, raw_line)) {
    ++line;
    // comments start at '#' outside of quotes
    bool in_quote = false;
    std::string code;
    for (char c : raw_line) {
      if (c == '"') in_quote = !in_quote;
      if (c == '#' && !in_quote) break;
      code += c;
    }
    code = trim(code);
    if (code.empty()) continue;

    std::size_t eq = code.find('=');
    if (eq == std::string::npos) fail(origin, line, "expected 'key = value'");
    std::string key = trim(code.substr(0, eq));
    std::string raw_value = trim(code.substr(eq + 1));
    if (key.empty()) fail(origin, line, "missing key before '='");
    if (raw_value.empty()) fail(origin, line, "missing value for key '" + key + "'");
    if (!seen.insert(key).second) fail(origin, line, "duplicate key '" + key + "'");

    Value v = parse_value(origin, line, raw_value);
    if (key == "characteristic") {
      if (v.kind != Value::Kind::Int)
        fail(origin, line, "key 'characteristic' expects an integer");
      spec.characteristic = v.num;
    } else if (key == "backend") {
      spec.backend = to_str(origin, line, key, v);
      if (spec.backend != "poly" && spec.backend != "semigroup")
        fail(origin, line, "backend must be \"poly\" or \"semigroup\"");
    } else if (key == "uvars") {
      spec.uvars = to_str_list(origin, line, key, v);
    } else if (key == "generators") {
      spec.generators = to_str_list(origin, line, key, v);
    } else if (key == "xvars") {
      spec.xvars = to_str_list(origin, line, key, v);
    } else if (key == "xweights") {
      spec.xweights = to_int_list(origin, line, key, v);
    } else if (key == "f") {
      spec.f = to_str(origin, line, key, v);
    } else if (key == "lmin") {
      spec.lmin = to_int(origin, line, key, v);
    } else if (key == "lmax") {
      spec.lmax = to_int(origin, line, key, v);
    } else if (key == "lstep") {
      spec.lstep = to_int(origin, line, key, v);
    } else if (key == "degcap") {
      spec.degcap = to_int(origin, line, key, v);
    } else if (key == "windowcap") {
      spec.windowcap = to_int(origin, line, key, v);
    } else {
      fail(origin, line, "unknown key '" + key + "'");
    }
  }
  return spec;
}

ScenarioSpec spec_from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return spec_from_config_text(buf.str(), path);
}

const std::map<std::string, std::string>& preset_texts() {
  static const std::map<std::string, std::string> presets = {
#include "presets_data.inc"
  };
  return presets;
}

ScenarioSpec spec_from_preset(const std::string& name) {
  const auto& presets = preset_texts();
  auto it = presets.find(name);
  if (it == presets.end()) {
    std::string known;
    for (const auto& [k, _] : presets) {
      if (!known.empty()) known += ", ";
      known += k;
    }
    throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
  }
  return spec_from_config_text(it->second, "preset:" + name);
}

BuiltScenario build_scenario(const ScenarioSpec& spec) {
  if (spec.uvars.empty()) throw ConfigError("uvars must not be empty");
  if (spec.xvars.empty()) throw ConfigError("xvars must not be empty");

  BuiltScenario out;
  if (spec.backend == "poly") {
    if (!spec.generators.empty())
      throw ConfigError("generators are only meaningful for the semigroup backend");
    out.ring = std::make_unique<Ring>(spec.characteristic, RingBackend::Poly, spec.uvars,
                                      std::vector<ExponentVec>{}, spec.xvars,
                                      spec.xweights);
  } else if (spec.backend == "semigroup") {
    if (spec.generators.empty())
      throw ConfigError("the semigroup backend needs a generators list");
    std::vector<ExponentVec> gens;
    for (const auto& g : spec.generators)
      gens.push_back(parse_plain_monomial(g, spec.uvars));
    out.ring = std::make_unique<Ring>(spec.characteristic, RingBackend::Semigroup,
                                      spec.uvars, gens, spec.xvars, spec.xweights);
  } else {
    throw ConfigError("backend must be \"poly\" or \"semigroup\"");
  }
  if (!spec.f.empty()) out.f = Hypersurface::from_expression(*out.ring, spec.f);
  return out;
}

}  // namespace lcsoc

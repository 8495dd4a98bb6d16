#include "fintop/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "fintop/error.hpp"

namespace fintop {

namespace {

using nlohmann::json;

std::size_t read_index(const json& value, const char* what) {
  if (!value.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  if (value.is_number_unsigned()) return value.get<std::size_t>();
  const auto v = value.get<std::int64_t>();
  if (v < 0) throw InvalidInput(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

FiniteSpace read_space_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("space document must be a JSON object");
  if (!doc.contains("points")) throw InvalidInput("space document lacks \"points\"");
  if (!doc.contains("opens")) throw InvalidInput("space document lacks \"opens\"");

  const std::size_t n = read_index(doc["points"], "\"points\"");
  if (n > kMaxPoints) {
    throw SizeLimit("spaces are limited to " + std::to_string(kMaxPoints) + " points, got " +
                    std::to_string(n));
  }
  const json& opens = doc["opens"];
  if (!opens.is_array()) throw InvalidInput("\"opens\" must be an array");

  std::vector<PointSet> family;
  family.reserve(opens.size());
  for (const json& open : opens) {
    if (!open.is_array()) throw InvalidInput("each open must be an array of points");
    PointSet set;
    for (const json& point : open) {
      const std::size_t x = read_index(point, "point index");
      if (x >= n) throw InvalidInput("point " + std::to_string(x) + " out of range");
      if (set.contains(x)) throw InvalidInput("point " + std::to_string(x) + " repeated in an open");
      set = set.with(x);
    }
    family.push_back(set);
  }
  return build_space(n, family);
}

std::string write_space_json(const FiniteSpace& s) {
  nlohmann::ordered_json opens = nlohmann::ordered_json::array();
  for (PointSet open : s.opens()) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (std::size_t x : open) members.push_back(x);
    opens.push_back(std::move(members));
  }
  nlohmann::ordered_json doc;
  doc["points"] = s.size();
  doc["opens"] = std::move(opens);
  return doc.dump();
}

FiniteSpace load_space(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_space_json(buffer.str());
}

}  // namespace fintop

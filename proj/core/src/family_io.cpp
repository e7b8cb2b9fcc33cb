#include "antichain/family_io.hpp"

#include "antichain/error.hpp"

#include <fstream>
#include <sstream>

namespace antichain {

using nlohmann::json;

json to_json(const SetWord &set) { return set.elements(); }

json to_json(const Family &family) {
  json sets = json::array();
  for (const auto &s : family.canonical().to_sets())
    sets.push_back(s);
  return json{{"n", family.n()}, {"sets", std::move(sets)}};
}

Family family_from_json(const json &j) {
  if (!j.is_object())
    throw InvalidArgument("family: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InvalidArgument("family: \"n\" must be an integer");
  if (!j.contains("sets") || !j["sets"].is_array())
    throw InvalidArgument("family: \"sets\" must be an array");
  const auto n64 = j["n"].get<long long>();
  if (n64 < 1 || n64 > kMaxGroundSet)
    throw InvalidArgument("family: n must lie in [1, 64]");
  const int n = static_cast<int>(n64);
  std::vector<std::uint64_t> words;
  for (const auto &set : j["sets"]) {
    if (!set.is_array())
      throw InvalidArgument("family: every set must be an array");
    std::uint64_t bits = 0;
    long long previous = 0;
    for (const auto &e : set) {
      if (!e.is_number_integer())
        throw InvalidArgument("family: elements must be integers");
      const auto v = e.get<long long>();
      if (v < 1 || v > n)
        throw InvalidArgument("family: element " + std::to_string(v) + " outside [1, n]");
      if (v <= previous)
        throw InvalidArgument("family: set elements must be strictly increasing");
      previous = v;
      bits |= std::uint64_t{1} << (v - 1);
    }
    words.push_back(bits);
  }
  return Family(n, std::move(words));
}

Family parse_family(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InvalidArgument(std::string("family: malformed JSON: ") + e.what());
  }
  return family_from_json(j);
}

Family read_family_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open family file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

} // namespace antichain

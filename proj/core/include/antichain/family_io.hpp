#pragma once

#include "antichain/setfam.hpp"

#include <json.hpp>

#include <string>

namespace antichain {

/// {"n": int, "sets": [[int,...],...]}, 1-based, each list strictly
/// increasing, members in canonical order.
nlohmann::json to_json(const Family &family);

/// Keeps the file's member order.  Throws InvalidArgument on any violation
/// of the format.
Family family_from_json(const nlohmann::json &j);
Family parse_family(const std::string &text);
Family read_family_file(const std::string &path);

nlohmann::json to_json(const SetWord &set);

} // namespace antichain

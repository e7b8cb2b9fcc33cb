#include "report.hpp"

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#ifndef ANTICHAIN_VERSION
#define ANTICHAIN_VERSION "unknown"
#endif

namespace antichain::cli {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::uint64_t h, const std::string &bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  // Separator so that ("ab","c") and ("a","bc") differ.
  h ^= 0xff;
  h *= kFnvPrime;
  return h;
}

} // namespace

std::string to_string(Status status) {
  switch (status) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::inconclusive:
    return "inconclusive";
  case Status::error:
    return "error";
  }
  return "error";
}

RunReport::RunReport(std::vector<std::string> command)
    : command_(std::move(command)), hash_(kFnvOffset), start_(std::chrono::steady_clock::now()) {
  for (const auto &arg : command_)
    hash_ = fnv1a(hash_, arg);
}

void RunReport::add_input(const std::string &bytes) { hash_ = fnv1a(hash_, bytes); }

Outcome &RunReport::add(Outcome outcome) {
  outcomes_.push_back(std::move(outcome));
  return outcomes_.back();
}

std::string RunReport::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

int RunReport::exit_code() const {
  bool inconclusive = false, error = false;
  for (const auto &o : outcomes_) {
    if (o.status == Status::fail)
      return kFailure;
    inconclusive |= o.status == Status::inconclusive;
    error |= o.status == Status::error;
  }
  if (error)
    return kUsage;
  return inconclusive ? kInconclusive : kPass;
}

nlohmann::json RunReport::to_json() const {
  using nlohmann::json;
  json checks = json::array();
  for (const auto &o : outcomes_)
    checks.push_back({{"name", o.name},
                      {"outcome", cli::to_string(o.status)},
                      {"source", o.source},
                      {"summary", o.summary},
                      {"detail", o.detail}});
  json timing = timing_;
  timing["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
  json j{{"version", ANTICHAIN_VERSION},
         {"command", command_},
         {"input_digest", digest()},
         {"checks", std::move(checks)},
         {"exit_code", exit_code()}};
  if (!result_.is_null())
    j["result"] = result_;
  j["timing"] = std::move(timing);
  return j;
}

std::string RunReport::render_pretty() const {
  std::ostringstream os;
  os << "antichain " << ANTICHAIN_VERSION << " :";
  for (const auto &arg : command_)
    os << ' ' << arg;
  os << "\ninput digest " << digest() << "\n";
  std::size_t width = 0;
  for (const auto &o : outcomes_)
    width = std::max(width, o.name.size());
  for (const auto &o : outcomes_) {
    std::string tag = "[" + cli::to_string(o.status) + "]";
    tag.resize(15, ' ');
    std::string name = o.name;
    name.resize(width, ' ');
    os << tag << name << "  " << o.summary;
    if (!o.source.empty())
      os << "  (" << o.source << ")";
    os << "\n";
  }
  if (!result_.is_null() && outcomes_.empty())
    os << result_.dump(2) << "\n";
  os << "exit " << exit_code() << "\n";
  return os.str();
}

} // namespace antichain::cli

#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace antichain::cli {

enum class Status { pass, fail, inconclusive, error };
std::string to_string(Status status);

struct Outcome {
  std::string name;
  Status status = Status::pass;
  std::string source; ///< the result the check is about
  std::string summary;
  nlohmann::json detail = nlohmann::json::object();
};

/// Machine-readable record of one invocation.  Everything except "timing"
/// is a pure function of the command line and the input bytes.
class RunReport {
public:
  explicit RunReport(std::vector<std::string> command);

  void add_input(const std::string &bytes);
  Outcome &add(Outcome outcome);
  void set_result(nlohmann::json result) { result_ = std::move(result); }
  nlohmann::json &timing() { return timing_; }

  const std::vector<Outcome> &outcomes() const { return outcomes_; }
  std::string digest() const;
  /// 1 on any fail, else 3 on any inconclusive, else 0; errors map to 2.
  int exit_code() const;

  nlohmann::json to_json() const;
  std::string render_pretty() const;

private:
  std::vector<std::string> command_;
  std::uint64_t hash_;
  std::vector<Outcome> outcomes_;
  nlohmann::json result_;
  nlohmann::json timing_ = nlohmann::json::object();
  std::chrono::steady_clock::time_point start_;
};

} // namespace antichain::cli

#pragma once

#include <chrono>
#include <sstream>
#include <string>

namespace hanzi::cli {

/// Start of a command run.
struct RunClock {
  std::chrono::system_clock::time_point wall = std::chrono::system_clock::now();
  std::chrono::steady_clock::time_point mono = std::chrono::steady_clock::now();
};

/// A command report: one timestamp header line followed by a body that is
/// a pure function of the inputs and the run configuration.
class Report {
 public:
  Report(std::string command, const RunClock& clock);

  std::ostringstream& body() { return body_; }
  std::string header() const;
  std::string render() const { return header() + body_.str(); }

 private:
  std::string command_;
  RunClock clock_;
  std::ostringstream body_;
};

std::string number_text(double v);
/// "京 U+4EAC"
std::string char_label(char32_t cp);

}  // namespace hanzi::cli

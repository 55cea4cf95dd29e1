#include "report.hpp"

#include <charconv>
#include <ctime>

#include "hanzigraph/utf8.hpp"

namespace hanzi::cli {

Report::Report(std::string command, const RunClock& clock) : command_(std::move(command)), clock_(clock) {}

std::string Report::header() const {
  const std::time_t t = std::chrono::system_clock::to_time_t(clock_.wall);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - clock_.mono).count();
  return "# hanzigraph " + command_ + " generated=" + stamp + " wall_clock_ms=" + number_text(elapsed) + "\n";
}

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string char_label(char32_t cp) { return utf8::encode(cp) + " U+" + utf8::hex(cp); }

}  // namespace hanzi::cli

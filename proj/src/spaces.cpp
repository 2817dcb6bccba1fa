#include "genlab/spaces.hpp"

#include <charconv>
#include <sstream>

namespace genlab {

std::string describe(const SpaceSpec& s) {
  if (std::holds_alternative<LInfSpace>(s)) return "linf";
  if (std::holds_alternative<C0Space>(s)) return "c0";
  if (const auto* lp = std::get_if<LpSpace>(&s)) {
    std::ostringstream os;
    os << "lp:" << lp->p;
    return os.str();
  }
  const auto& cap = std::get<CapAboveSpace>(s);
  std::ostringstream os;
  os << "cap:" << cap.a;
  if (cap.custom_schedule) os << " (custom schedule)";
  return os.str();
}

SpaceSpec parse_space(const std::string& text) {
  if (text == "linf") return linf_space();
  if (text == "c0") return c0_space();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string num = text.substr(colon + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec == std::errc{} && ptr == num.data() + num.size()) {
      if (head == "lp") return lp_space(value);
      if (head == "cap") return cap_above_space(value);
    }
  }
  throw UsageError("cannot parse space spec '" + text + "' (expected linf, c0, lp:<p>, cap:<a>)");
}

}  // namespace genlab

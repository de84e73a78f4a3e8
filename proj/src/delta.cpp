#include "cgr/delta.hpp"

#include <cctype>

namespace cgr {

std::optional<Delta> Delta::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    Delta d{std::stoll(std::string(a)), std::stoll(std::string(b))};
    if (d.den == 0) return std::nullopt;
    return d;
  }
  size_t dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) return std::nullopt;
    if (frac.size() > 12) return std::nullopt;
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long num = (whole.empty() ? 0 : std::stoll(std::string(whole))) * den +
                    std::stoll(std::string(frac));
    return Delta{num, den};
  }
  if (!all_digits(s)) return std::nullopt;
  return Delta{std::stoll(std::string(s)), 1};
}

}  // namespace cgr

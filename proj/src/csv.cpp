#include "wavefront/csv.hpp"

#include <charconv>
#include <cmath>

namespace wavefront::csv {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Writer::Writer(std::ostream& os, std::initializer_list<std::string> header)
    : Writer(os, std::vector<std::string>(header)) {}

Writer::Writer(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os_ << ',';
    os_ << header[i];
  }
  os_ << '\n';
}

void Writer::row(std::initializer_list<double> values) {
  row(std::span<const double>(values.begin(), values.size()));
}

void Writer::row(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os_ << ',';
    os_ << format_double(values[i]);
  }
  os_ << '\n';
}

}  // namespace wavefront::csv

#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace wavefront::csv {

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double x);

/// Comma-separated rows terminated by '\n'; the header is written on construction.
class Writer {
 public:
  Writer(std::ostream& os, std::initializer_list<std::string> header);
  Writer(std::ostream& os, const std::vector<std::string>& header);

  void row(std::initializer_list<double> values);
  void row(std::span<const double> values);

 private:
  std::ostream& os_;
};

}  // namespace wavefront::csv

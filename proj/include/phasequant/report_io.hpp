#pragma once

#include <string>
#include <vector>

namespace phasequant::report_io {

// Shortest round-trip-faithful decimal rendering used by every CSV/JSON
// surface, so repeated runs are byte-identical.
std::string format_double(double v);

std::string csv_line(const std::vector<std::string>& fields);

// Writes content to path (or stdout when path is "-"); throws
// std::runtime_error on I/O failure.
void write_text(const std::string& path, const std::string& content);

}  // namespace phasequant::report_io

#pragma once

#include <cstdio>
#include <iosfwd>
#include <string>
#include <vector>

namespace clp {

// Formats a double with enough digits (17 significant) that parsing the
// text recovers the exact bit pattern. All persisted numbers go through
// this so files round-trip losslessly.
std::string format_double(double v);

double parse_double(const std::string& s);
long parse_long(const std::string& s);

// Splits on any run of spaces/tabs.
std::vector<std::string> split_ws(const std::string& line);
std::vector<std::string> split_char(const std::string& line, char sep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace clp

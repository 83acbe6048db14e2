#pragma once

#include <string>
#include <vector>

namespace mvdfq {

// 17 significant digits: enough for exact double round-trips through text.
std::string fmt_real(double v);

std::vector<std::string> split(const std::string& s, char sep);

// strict full-token double parse; throws Err::MalformedFile with `where` on failure
double parse_real(const std::string& tok, const std::string& where);
long parse_int(const std::string& tok, const std::string& where);

// reads the whole file as lines; strips trailing \r; throws Err::IoError
std::vector<std::string> read_lines(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace mvdfq

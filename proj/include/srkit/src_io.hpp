#pragma once

#include "srkit/code.hpp"

#include <istream>
#include <string>

namespace srk {

// Text format, blocks in the order the profile was declared:
//   srcv1
//   field <p> <k> mod=<c_k,...,c_0>
//   profile <n>x<m>,<n>x<m>,...
//   dim <k>
//   (blank line, "gen <i>", one line per block such as "1 0;0 1") per generator
LinearCode parse_src(std::istream& in);
LinearCode parse_src_text(const std::string& text);
LinearCode read_src_file(const std::string& path);
std::string write_src(const LinearCode& c);
void write_src_file(const LinearCode& c, const std::string& path);

}  // namespace srk

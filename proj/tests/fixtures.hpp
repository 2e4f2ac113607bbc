#pragma once

#include "srkit/src_io.hpp"

#include <string>

inline std::string data_path(const std::string& name) { return std::string(SRKIT_DATA_DIR) + "/" + name; }
inline srk::LinearCode fixture(const std::string& name) { return srk::read_src_file(data_path(name)); }

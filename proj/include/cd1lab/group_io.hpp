#pragma once
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cd1lab/perm.hpp"

namespace cd1lab {

// malformed or unreadable input file; message is "name:line: what"
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format for permutation groups:
//   degree 6
//   (0 1 2)(3 4)
//   (1 2)
// First significant line is "degree <d>"; every later significant line is one
// generator in 0-based cycle notation. '#' starts a comment; blank lines are
// skipped. Errors carry the 1-based line number.
Group parse_group_stream(std::istream& in, const std::string& name,
                         uint64_t element_cap = Group::default_element_cap());
Group load_group_file(const std::string& path,
                      uint64_t element_cap = Group::default_element_cap());
void write_group_file(const std::string& path, const Group& g,
                      const std::string& comment = "");

}  // namespace cd1lab

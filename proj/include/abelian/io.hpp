#ifndef ABELIAN_IO_HPP
#define ABELIAN_IO_HPP

#include <iosfwd>
#include <string>

#include "abelian/code.hpp"

namespace abelian {

// Line-oriented code file:
//   p=2 m=1
//   r=[3,55]
//   multiplier=[1,1]
//   defining_set_reps=[[0,1],[0,5],...]
// Reps must be the sorted lexicographically-least orbit representatives;
// readers reject anything else.
void write_code(std::ostream& os, const AbelianCode& c);
CodePtr read_code(std::istream& is);

void write_code_file(const std::string& path, const AbelianCode& c);
CodePtr read_code_file(const std::string& path);

}  // namespace abelian

#endif

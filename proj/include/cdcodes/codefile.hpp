// Line-oriented text format for subspace code files: a "q n k count" header
// followed by count blocks, each k lines of n field-element indices, with
// blocks separated by blank lines.
#pragma once

#include "cdcodes/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cdc {

struct CodeFile {
  long q = 0, n = 0, k = 0;
  std::vector<Subspace> subspaces;
};

std::string render_codefile(long q, long n, long k,
                            const std::vector<Subspace>& subs);

// throws std::invalid_argument on malformed input or out-of-range indices
CodeFile parse_codefile(std::istream& in);
CodeFile parse_codefile(const std::string& text);

}  // namespace cdc

#include "cdcodes/codefile.hpp"

#include <sstream>
#include <stdexcept>

namespace cdc {

std::string render_codefile(long q, long n, long k,
                            const std::vector<Subspace>& subs) {
  std::ostringstream os;
  os << q << ' ' << n << ' ' << k << ' ' << subs.size() << '\n';
  for (const auto& s : subs) {
    os << '\n';
    if (s.n != n || s.gen.rows != k || s.gen.cols != n)
      throw std::invalid_argument("render_codefile: member shape mismatch");
    for (long r = 0; r < k; ++r) {
      for (long c = 0; c < n; ++c) os << (c ? " " : "") << s.gen.at(r, c);
      os << '\n';
    }
  }
  return os.str();
}

CodeFile parse_codefile(std::istream& in) {
  CodeFile f;
  long count = 0;
  if (!(in >> f.q >> f.n >> f.k >> count))
    throw std::invalid_argument("parse_codefile: malformed header");
  if (f.q < 2 || f.n < 1 || f.k < 1 || f.k > f.n || count < 0)
    throw std::invalid_argument("parse_codefile: header out of range");
  Field fld = field_new(f.q);
  for (long b = 0; b < count; ++b) {
    Mat m(f.k, f.n, fld);
    for (long r = 0; r < f.k; ++r)
      for (long c = 0; c < f.n; ++c) {
        long x;
        if (!(in >> x))
          throw std::invalid_argument("parse_codefile: truncated block " +
                                      std::to_string(b));
        if (x < 0 || x >= f.q)
          throw std::invalid_argument(
              "parse_codefile: element out of range in block " +
              std::to_string(b));
        m.at(r, c) = x;
      }
    f.subspaces.push_back(Subspace{f.n, f.k, std::move(m)});
  }
  long extra;
  if (in >> extra)
    throw std::invalid_argument("parse_codefile: trailing data");
  return f;
}

CodeFile parse_codefile(const std::string& text) {
  std::istringstream is(text);
  return parse_codefile(is);
}

}  // namespace cdc

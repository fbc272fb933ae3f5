#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdcodes/ferrers.hpp"

#include <string>
#include <vector>

using namespace cdc;

namespace {

Bits bits(const std::string& s) {
  Bits b;
  for (char ch : s) b.push_back(ch == '1');
  return b;
}

// rows as strings of '.' (dot) and ' '/'0' (empty)
DotPattern pat(const std::vector<std::string>& rows) {
  DotPattern p = DotPattern::empty(static_cast<long>(rows.size()),
                                   static_cast<long>(rows[0].size()));
  for (long r = 0; r < p.m; ++r)
    for (long c = 0; c < p.n; ++c)
      if (rows[r][c] == '.') p.set(r, c);
  return p;
}

bool equal(const DotPattern& a, const DotPattern& b) {
  return a.m == b.m && a.n == b.n && a.cell == b.cell;
}

}  // namespace

TEST_CASE("diagram from column counts") {
  FerrersDiagram f = ferrers({2, 3, 4, 5});
  CHECK(f.m == 5);
  CHECK(f.n == 4);
  CHECK(f.dots() == 14);
  // row counts 4,4,3,2,1 with dots right-justified
  CHECK(equal(to_pattern(f), pat({"....",
                                  "....",
                                  " ...",
                                  "  ..",
                                  "   ."})));
  CHECK_THROWS_AS(ferrers({3, 2}), std::invalid_argument);  // not nondecreasing
}

TEST_CASE("inverse reverses column counts, dots stay in the top rows") {
  FerrersDiagram f = ferrers({2, 3, 4, 5});
  DotPattern inv = inverse(f);
  CHECK(equal(inv, pat({"....",
                        "....",
                        "... ",
                        "..  ",
                        ".   "})));
  // not right-justified, so it does not read back as a plain diagram
  CHECK(!pattern_as_ferrers(inv).has_value());
}

TEST_CASE("transpose exchanges rows and columns") {
  FerrersDiagram f = ferrers({2, 3, 4, 5});
  FerrersDiagram t = transpose(f);
  CHECK(t.gamma == std::vector<long>{1, 2, 3, 4, 4});
  CHECK(equal(to_pattern(t), pat({".....",
                                  " ....",
                                  "  ...",
                                  "   .."})));
  FerrersDiagram tt = transpose(t);
  CHECK(tt.gamma == f.gamma);
  CHECK(t.dots() == f.dots());
}

TEST_CASE("right-justified patterns read back as diagrams") {
  FerrersDiagram f = ferrers({1, 1, 3, 3, 6, 6});
  auto back = pattern_as_ferrers(to_pattern(f));
  REQUIRE(back.has_value());
  CHECK(back->gamma == f.gamma);
}

TEST_CASE("echelon dot pattern, forward flavor (7,3 example)") {
  ProfileVector v{Flavor::identifying, bits("1011000"), 0, 0, 0};
  DotPattern p = from_echelon_form(v);
  // stripped 3 x 4 grid (pivot columns 0,2,3 removed)
  CHECK(equal(p, pat({"....",
                      " ...",
                      " ..."})));
  CHECK(p.dots() == 10);
}

TEST_CASE("echelon dot pattern, inverse flavor (7,3 example)") {
  ProfileVector v{Flavor::inverse, bits("0001011"), 0, 0, 0};
  DotPattern p = from_echelon_form(v);
  // rows ordered by decreasing pivot (7th, 6th, 4th position)
  CHECK(equal(p, pat({"....",
                      "....",
                      "... "})));
  CHECK(p.dots() == 11);
}

TEST_CASE("echelon dot pattern, two-sided flavor (14,6 example)") {
  ProfileVector v{Flavor::bilateral, bits("11010000001101"), 6, 2, 6};
  DotPattern p = from_echelon_form(v);
  // stripped 6 x 8 grid; upper rows confined to the left+middle columns,
  // lower rows to the middle+right columns
  CHECK(equal(p, pat({".....   ",
                      ".....   ",
                      " ....   ",
                      "   .....",
                      "   .... ",
                      "   .... "})));
  CHECK(p.dots() == 27);
}

TEST_CASE("echelon dot pattern, mirrored two-sided flavor (15,6 example)") {
  ProfileVector v{Flavor::inverse_bilateral, bits("101100000001101"), 7, 2, 6};
  DotPattern p = from_echelon_form(v);
  // stripped 6 x 9 grid; upper rows pivot on the right, lower on the left
  CHECK(equal(p, pat({"    .....",
                      "    .... ",
                      "    .... ",
                      "......   ",
                      " .....   ",
                      " .....   "})));
  CHECK(p.dots() == 29);
}

TEST_CASE("dimension bound on diagrams") {
  // full 3 x 4 diagram at distance 2: min(3*3, 2*4) = 8
  CHECK(singleton_bound(ferrers({3, 3, 3, 3}), 2) == 8);
  // distance 1 counts every dot
  CHECK(singleton_bound(ferrers({2, 3, 4, 5}), 1) == 14);
  // the staircase diagram used by the explicit 17-dim instance
  CHECK(singleton_bound(ferrers({1, 1, 3, 3, 6, 6}), 3) == 8);
  // pattern overload agrees with the diagram overload
  for (long d = 1; d <= 3; ++d)
    CHECK(singleton_bound(to_pattern(ferrers({1, 1, 3, 3, 6, 6})), d) ==
          singleton_bound(ferrers({1, 1, 3, 3, 6, 6}), d));
}

TEST_CASE("assembled two-sided pattern") {
  // left 2x2 full diagram, one middle column, right inverse of a 2x2 full
  DotPattern p = bilateral_pattern(ferrers({2, 2}), 1, ferrers({2, 2}),
                                   /*k1=*/2, /*k2=*/2);
  CHECK(equal(p, pat({"...  ",
                      "...  ",
                      "  ...",
                      "  ..."})));
  // taller blocks leave empty rows inside each side
  DotPattern q = bilateral_pattern(ferrers({1, 2}), 0, ferrers({2, 2}),
                                   /*k1=*/2, /*k2=*/3);
  CHECK(q.m == 5);
  CHECK(q.n == 4);
  CHECK(q.dots() == 3 + 4);
}

TEST_CASE("pattern bookkeeping") {
  DotPattern full = DotPattern::full(2, 3);
  CHECK(full.dots() == 6);
  DotPattern none = DotPattern::empty(2, 3);
  CHECK(none.dots() == 0);
  none.set(1, 2);
  CHECK(none.has(1, 2));
  CHECK(none.dots() == 1);
}

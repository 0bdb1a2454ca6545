#include <set>

#include "doctest.h"
#include "mmtw/vertex_set.hpp"
#include "oracles.hpp"

using mmtw::VertexSet;

TEST_CASE("basic membership and size") {
  VertexSet s{3, 1, 70};
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK(s.contains(70));
  CHECK_FALSE(s.contains(2));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.front() == 1);
  CHECK(s.back() == 70);
  s.erase(70);
  CHECK(s.back() == 3);
  CHECK(s.words().size() == 1);
  CHECK(VertexSet{}.front() == -1);
  CHECK(VertexSet{}.back() == -1);
}

TEST_CASE("trailing words are trimmed so equality is structural") {
  VertexSet a{1, 200};
  a.erase(200);
  CHECK(a == VertexSet{1});
  CHECK(a.hash() == VertexSet{1}.hash());
  VertexSet b = VertexSet{5, 130} - VertexSet{130};
  CHECK(b == VertexSet{5});
}

TEST_CASE("set algebra") {
  const VertexSet a{0, 2, 4, 64};
  const VertexSet b{2, 3, 64, 65};
  CHECK((a | b) == VertexSet{0, 2, 3, 4, 64, 65});
  CHECK((a & b) == VertexSet{2, 64});
  CHECK((a - b) == VertexSet{0, 4});
  CHECK(a.intersects(b));
  CHECK_FALSE(VertexSet{0}.intersects(VertexSet{1}));
  CHECK(VertexSet{2, 64}.is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(VertexSet{}.is_subset_of(VertexSet{}));
  CHECK(a.with(7).contains(7));
  CHECK_FALSE(a.without(64).contains(64));
  CHECK(VertexSet::range(3) == VertexSet{0, 1, 2});
  CHECK(VertexSet::range(0).empty());
}

TEST_CASE("ordering is by bitset value") {
  CHECK(VertexSet{} < VertexSet{0});
  CHECK(VertexSet{0} < VertexSet{1});
  CHECK(VertexSet{0, 1} < VertexSet{2});
  CHECK(VertexSet{0, 2} < VertexSet{1, 2});
  CHECK(VertexSet{63} < VertexSet{64});
  CHECK(VertexSet{0, 64} > VertexSet{1, 2, 3});
}

TEST_CASE("iteration, string forms and canonicalize") {
  const VertexSet s{9, 0, 65};
  CHECK(s.to_vector() == std::vector<int>{0, 9, 65});
  CHECK(s.to_string() == "{0,9,65}");
  CHECK(s.to_string(1) == "{1,10,66}");
  std::vector<VertexSet> fam{{2}, {1}, {2}, {}};
  mmtw::canonicalize(fam);
  CHECK(fam == std::vector<VertexSet>{{}, {1}, {2}});
}

TEST_CASE("property: operations agree with std::set") {
  mmtw::test::Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    std::set<int> sa;
    std::set<int> sb;
    VertexSet a;
    VertexSet b;
    for (int i = rng.uniform(0, 12); i > 0; --i) {
      const int v = rng.uniform(0, 150);
      sa.insert(v);
      a.insert(v);
    }
    for (int i = rng.uniform(0, 12); i > 0; --i) {
      const int v = rng.uniform(0, 150);
      sb.insert(v);
      b.insert(v);
    }
    std::set<int> u = sa;
    u.insert(sb.begin(), sb.end());
    std::set<int> in;
    std::set<int> diff;
    for (int v : sa) (sb.count(v) ? in : diff).insert(v);
    CHECK((a | b).to_vector() == std::vector<int>(u.begin(), u.end()));
    CHECK((a & b).to_vector() == std::vector<int>(in.begin(), in.end()));
    CHECK((a - b).to_vector() == std::vector<int>(diff.begin(), diff.end()));
    CHECK(a.is_subset_of(b) == std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
    CHECK(a.intersects(b) == !in.empty());
    CHECK(a.size() == static_cast<int>(sa.size()));
    CHECK(((a <=> b) == 0) == (sa == sb));
  }
}

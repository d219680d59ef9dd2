#include <doctest.h>

#include <sstream>

#include "hdc/io.hpp"

using namespace hdc;

TEST_CASE("hex bit order: component 0 is the low bit of byte 0") {
  Hypervector v(12);  // bits 0..11
  v.set_component(0, +1);
  v.set_component(1, +1);
  v.set_component(9, +1);
  // byte 0 = 0b00000011 = 03, byte 1 = 0b00000010 = 02
  CHECK(to_hex(v) == "0302");
  CHECK(from_hex(12, "0302") == v);
}

TEST_CASE("codebook round trip preserves everything") {
  Rng rng(200);
  for (const std::size_t dim : {7u, 64u, 129u, 1000u}) {
    ItemMemory mem(dim, rng.next());
    mem.add("alpha", random_hypervector(dim, rng));
    mem.add("beta", random_hypervector(dim, rng));
    mem.add("gamma", random_hypervector(dim, rng));
    std::stringstream ss;
    save_codebook(mem, ss);
    const ItemMemory back = load_codebook(ss);
    REQUIRE(back.dim() == mem.dim());
    REQUIRE(back.size() == mem.size());
    CHECK(back.tie_break_seed() == mem.tie_break_seed());
    CHECK(back.tie_break() == mem.tie_break());
    for (std::size_t i = 0; i < mem.size(); ++i) {
      CHECK(back.name(i) == mem.name(i));
      CHECK(back.vector(i) == mem.vector(i));
    }
  }
}

TEST_CASE("codebook serialization is byte stable") {
  Rng r1(201), r2(201);
  ItemMemory a(100, 5), b(100, 5);
  a.add("x", random_hypervector(100, r1));
  b.add("x", random_hypervector(100, r2));
  std::stringstream sa, sb;
  save_codebook(a, sa);
  save_codebook(b, sb);
  CHECK(sa.str() == sb.str());
}

TEST_CASE("bad codebook input is rejected") {
  std::stringstream ss("not-a-codebook\n");
  CHECK_THROWS(load_codebook(ss));
  std::stringstream truncated("hdc-codebook 1\ndim 64\ntiebreak 1\nentries 2\na ");
  CHECK_THROWS(load_codebook(truncated));
}

TEST_CASE("hetero memory round trip") {
  Rng rng(202);
  HeteroMemory mem(96, {"write", "next", "move"});
  mem.add_row(random_hypervector(96, rng), {"3", "A", "R"});
  mem.add_row(random_hypervector(96, rng), {"2", "B", "L"});
  std::stringstream ss;
  save_hetero(mem, ss);
  const HeteroMemory back = load_hetero(ss);
  REQUIRE(back.rows() == 2);
  CHECK(back.field_names() == mem.field_names());
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(back.address(r) == mem.address(r));
    CHECK(back.content(r) == mem.content(r));
  }
}

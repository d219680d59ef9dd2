#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "hdc/encoders.hpp"

using namespace hdc;

namespace {

std::vector<std::string> alphabet(std::size_t count, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(prefix.empty() ? std::string(1, static_cast<char>('a' + i))
                                 : prefix + std::to_string(i));
  return out;
}

const std::vector<std::string> kAbc = alphabet(26);

}  // namespace

TEST_CASE("set encoding: membership expectations and errors") {
  Rng rng(300);
  const auto cb = make_symbol_codebook(10000, kAbc, rng);
  const std::vector<std::string> members = {"a", "b", "c", "d", "e"};
  const Accumulator s = encode_set(cb, members);
  // exact linear decomposition around N
  CHECK(std::llabs(dot(s, cb.vector("a")) - 10000) <= 4 * 4 * 100);
  CHECK(std::llabs(dot(s, cb.vector("f"))) <= 5 * 4 * 100);
  CHECK(encode_set(cb, {}).is_zero());
  CHECK_THROWS_AS(encode_set(cb, std::vector<std::string>{"a", "a"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(encode_set(cb, std::vector<std::string>{"unknown-name"}),
                  std::invalid_argument);
}

TEST_CASE("set membership accuracy at N/2 threshold") {
  Rng rng(301);
  const auto names = alphabet(1000, "s");
  const auto cb = make_symbol_codebook(10000, names, rng);
  std::size_t good = 0, total = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    // five distinct members
    std::vector<std::size_t> idx;
    while (idx.size() < 5) {
      const std::size_t i = rng.bounded(1000);
      bool dup = false;
      for (const auto j : idx) dup |= i == j;
      if (!dup) idx.push_back(i);
    }
    Accumulator s(10000);
    for (const auto i : idx) s.add(cb.vector(i));
    for (int k = 0; k < 5; ++k) {
      good += dot(s, cb.vector(idx[k])) >= 5000;
      std::size_t out = rng.bounded(1000);
      bool member = false;
      for (const auto j : idx) member |= out == j;
      if (!member) good += dot(s, cb.vector(out)) < 5000;
      total += member ? 1 : 2;
    }
  }
  CHECK(static_cast<double>(good) / static_cast<double>(total) >= 0.999);
}

TEST_CASE("multiset counts are exact and decodable") {
  Rng rng(302);
  const auto cb = make_symbol_codebook(512, kAbc, rng);
  const Accumulator s =
      encode_multiset(cb, {{"a", 3}, {"b", 2}, {"c", 1}});
  Accumulator direct(512);
  for (int i = 0; i < 3; ++i) direct.add(cb.vector("a"));
  for (int i = 0; i < 2; ++i) direct.add(cb.vector("b"));
  direct.add(cb.vector("c"));
  CHECK(s == direct);
  CHECK(encode_multiset(cb, {{"a", 0}, {"z", 0}}).is_zero());
  CHECK_THROWS_AS(encode_multiset(cb, {{"a", -1}}), std::invalid_argument);
}

TEST_CASE("histogram decode: correlation with true counters") {
  Rng rng(303);
  const auto names = alphabet(256, "h");
  double corr_sum = 0;
  const int sims = 30;
  for (int sim = 0; sim < sims; ++sim) {
    const auto cb = make_symbol_codebook(10000, names, rng);
    std::map<std::string, std::int64_t> counts;
    for (const auto& n : names)
      counts[n] = static_cast<std::int64_t>(rng.bounded(1024));
    const Hypervector h = cb.normalize(encode_multiset(cb, counts));
    const auto est = decode_histogram(h, cb);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      mx += static_cast<double>(est[i].second);
      my += static_cast<double>(counts[est[i].first]);
    }
    mx /= 256; my /= 256;
    double sxy = 0, sxx = 0, syy = 0;
    for (const auto& [name, value] : est) {
      const double dx = static_cast<double>(value) - mx;
      const double dy = static_cast<double>(counts[name]) - my;
      sxy += dx * dy; sxx += dx * dx; syy += dy * dy;
    }
    corr_sum += sxy / std::sqrt(sxx * syy);
  }
  CHECK(corr_sum / sims >= 0.8);
}

TEST_CASE("histogram decode fixtures") {
  Rng rng(304);
  const auto cb = make_symbol_codebook(2048, kAbc, rng);
  // normalize(5a) = a
  const Hypervector h = cb.normalize(encode_multiset(cb, {{"a", 5}}));
  CHECK(h == cb.vector("a"));
  const auto est = decode_histogram(h, cb);
  std::size_t argmax = 0;
  for (std::size_t i = 1; i < est.size(); ++i)
    if (est[i].second > est[argmax].second) argmax = i;
  CHECK(est[argmax].first == "a");
  CHECK(est[0].second == 2048);
}

TEST_CASE("cross product equals the sum of pairwise binds") {
  Rng rng(305);
  const auto cb = make_symbol_codebook(4096, kAbc, rng);
  SUBCASE("singletons reduce to a single bind") {
    const Accumulator p = cross_product(encode_set(cb, {{"a"}}),
                                        encode_set(cb, {{"x"}}));
    const Accumulator direct{Accumulator(bind(cb.vector("a"), cb.vector("x")))};
    CHECK(p == direct);
  }
  SUBCASE("5 x 3 sets, component exact") {
    const std::vector<std::string> sa = {"a", "b", "c", "d", "e"};
    const std::vector<std::string> sb = {"x", "y", "z"};
    const Accumulator p = cross_product(encode_set(cb, sa), encode_set(cb, sb));
    Accumulator brute(4096);
    for (const auto& u : sa)
      for (const auto& v : sb) brute.add(bind(cb.vector(u), cb.vector(v)));
    CHECK(p == brute);
    CHECK(std::llabs(dot(p, bind(cb.vector("c"), cb.vector("y"))) - 4096) <=
          15 * 4 * 64);
  }
}

TEST_CASE("sequence sum encoding and probing") {
  Rng rng(306);
  const auto cb = make_symbol_codebook(10000, kAbc, rng);
  const std::vector<std::string> seq = {"a", "b", "c", "d", "e"};
  const Accumulator s = encode_sequence_sum(cb, seq);

  SUBCASE("construction matches the positional formula") {
    Accumulator direct(10000);
    for (std::size_t i = 0; i < 5; ++i)
      direct.add(permute(cb.vector(seq[i]), static_cast<std::int64_t>(4 - i)));
    CHECK(s == direct);
  }
  SUBCASE("shifting back exposes position 3") {
    CHECK(cb.cleanup(permute(s, -2)).name == "c");
    CHECK(probe_position(s, 3, 5, cb).name == "c");
    CHECK_THROWS_AS(probe_position(s, 6, 5, cb), std::invalid_argument);
  }
  SUBCASE("singleton sequence is the element itself") {
    const Accumulator one = encode_sequence_sum(cb, std::vector<std::string>{"q"});
    CHECK(dot(one, cb.vector("q")) == 10000);
    CHECK(probe_position(one, 1, 1, cb).name == "q");
  }
  SUBCASE("shared positions dominate the similarity") {
    const Accumulator t =
        encode_sequence_sum(cb, std::vector<std::string>{"a", "b", "x", "d", "e"});
    const double ratio = static_cast<double>(dot(s, t)) / (5.0 * 10000.0);
    CHECK(ratio > 0.75);
    CHECK(ratio < 0.85);
  }
  SUBCASE("probing succeeds across random sequences") {
    std::size_t good = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::string> r(5);
      for (auto& sym : r) sym = kAbc[rng.bounded(26)];
      const Accumulator enc = encode_sequence_sum(cb, r);
      for (std::size_t i = 1; i <= 5; ++i)
        good += probe_position(enc, i, 5, cb).name == r[i - 1];
    }
    CHECK(good == 5000);
  }
}

TEST_CASE("sequence product encoding") {
  Rng rng(307);
  const auto cb = make_symbol_codebook(10000, kAbc, rng);
  const std::vector<std::string> seq = {"a", "b", "c", "d", "e"};
  const Hypervector p = encode_sequence_product(cb, seq);
  CHECK(p == encode_sequence_product(cb, seq));
  CHECK(dot(p, p) == 10000);
  const Hypervector q =
      encode_sequence_product(cb, std::vector<std::string>{"a", "b", "x", "d", "e"});
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> r(5);
    for (auto& sym : r) sym = kAbc[rng.bounded(26)];
    auto r2 = r;
    r2[rng.bounded(5)] = kAbc[rng.bounded(26)];
    if (r2 == r) continue;
    if (std::llabs(dot(encode_sequence_product(cb, r),
                       encode_sequence_product(cb, r2))) > 4 * 100)
      ++bad;
  }
  CHECK(std::llabs(dot(p, q)) <= 4 * 100);
  CHECK(bad <= 5);
  const Hypervector one =
      encode_sequence_product(cb, std::vector<std::string>{"k"});
  CHECK(one == cb.vector("k"));
}

TEST_CASE("replace at a position, both variants") {
  Rng rng(308);
  const auto cb = make_symbol_codebook(2048, kAbc, rng);
  const std::vector<std::string> before = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> after = {"a", "b", "c", "z", "e"};
  SUBCASE("sum variant is component exact") {
    const Accumulator got =
        replace_at(encode_sequence_sum(cb, before), 4, "d", "z", 5, cb);
    CHECK(got == encode_sequence_sum(cb, after));
  }
  SUBCASE("product variant is component exact") {
    const Hypervector got =
        replace_at(encode_sequence_product(cb, before), 4, "d", "z", 5, cb);
    CHECK(got == encode_sequence_product(cb, after));
  }
  SUBCASE("replacing a symbol with itself is the identity") {
    const Accumulator s = encode_sequence_sum(cb, before);
    CHECK(replace_at(s, 2, "b", "b", 5, cb) == s);
    const Hypervector ph = encode_sequence_product(cb, before);
    CHECK(replace_at(ph, 2, "b", "b", 5, cb) == ph);
  }
}

TEST_CASE("concatenation by shifting") {
  Rng rng(309);
  const auto cb = make_symbol_codebook(4096, kAbc, rng);
  const std::vector<std::string> s1 = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> s2 = {"x", "y", "z"};
  const std::vector<std::string> joined = {"a", "b", "c", "d", "e", "x", "y", "z"};
  const Accumulator got = shift_and_concat(encode_sequence_sum(cb, s1), s2, cb);
  CHECK(got == encode_sequence_sum(cb, joined));
  CHECK(shift_and_concat(encode_sequence_sum(cb, s1), {}, cb) ==
        encode_sequence_sum(cb, s1));
  CHECK(probe_position(got, 6, 8, cb).name == "x");
}

TEST_CASE("ngram statistics") {
  Rng rng(310);
  const auto cb = make_symbol_codebook(4096, kAbc, rng);
  SUBCASE("n=1 equals the multiset of symbols") {
    const std::vector<std::string> text = {"a", "b", "a", "c", "a"};
    CHECK(encode_ngram_stats(cb, text, 1) ==
          encode_multiset(cb, {{"a", 3}, {"b", 1}, {"c", 1}}));
  }
  SUBCASE("abab bigrams: 2*ab + ba") {
    const std::vector<std::string> text = {"a", "b", "a", "b"};
    const Accumulator got = encode_ngram_stats(cb, text, 2);
    Accumulator expect(4096);
    const std::vector<std::string> ab = {"a", "b"};
    const std::vector<std::string> ba = {"b", "a"};
    expect.add(encode_sequence_product(cb, ab));
    expect.add(encode_sequence_product(cb, ab));
    expect.add(encode_sequence_product(cb, ba));
    CHECK(got == expect);
  }
  SUBCASE("errors") {
    const std::vector<std::string> text = {"a", "b"};
    CHECK_THROWS_AS(encode_ngram_stats(cb, text, 0), std::invalid_argument);
    CHECK_THROWS_AS(encode_ngram_stats(cb, text, 3), std::invalid_argument);
  }
  SUBCASE("same text correlates, disjoint trigram sets do not") {
    Rng trng(311);
    std::vector<std::string> t1(40), t2(40);
    for (auto& s : t1) s = kAbc[trng.bounded(13)];
    for (auto& s : t2) s = kAbc[13 + trng.bounded(13)];
    const Accumulator g1 = encode_ngram_stats(cb, t1, 3);
    const Accumulator g2 = encode_ngram_stats(cb, t2, 3);
    CHECK(dot(g1, g1) > 30 * 4096 / 2);
    CHECK(std::llabs(dot(g1, g2)) < 38 * 4 * 64);
  }
}

TEST_CASE("graph encoding and edge queries") {
  Rng rng(312);
  const auto cb = make_symbol_codebook(10000, kAbc, rng);
  SUBCASE("pentagon: unbinding a vertex exposes its two neighbors") {
    const std::vector<Edge> edges = {
        {"a", "b"}, {"a", "e"}, {"b", "c"}, {"c", "d"}, {"d", "e"}};
    const Accumulator g = encode_graph(cb, edges, false);
    const Accumulator unbound = bind(g, cb.vector("a"));
    std::vector<std::pair<std::int64_t, std::string>> scored;
    for (const auto& v : kAbc)
      scored.push_back({dot(unbound, cb.vector(v)), v});
    std::sort(scored.rbegin(), scored.rend());
    std::vector<std::string> top = {scored[0].second, scored[1].second};
    std::sort(top.begin(), top.end());
    CHECK(top == std::vector<std::string>{"b", "e"});
  }
  SUBCASE("single edge graph is that bind") {
    const std::vector<Edge> one = {{"p", "q"}};
    const Accumulator g = encode_graph(cb, one, false);
    CHECK(dot(g, bind(cb.vector("p"), cb.vector("q"))) == 10000);
  }
  SUBCASE("directed edges are one way") {
    const std::vector<Edge> e = {{"a", "b"}};
    const Accumulator g = encode_graph(cb, e, true);
    CHECK(edge_query(g, "a", "b", true, cb) == 10000);
    CHECK(std::llabs(edge_query(g, "b", "a", true, cb)) <= 4 * 100);
  }
  SUBCASE("edge presence accuracy over random graphs") {
    const auto verts = alphabet(20, "v");
    const auto vcb = make_symbol_codebook(10000, verts, rng);
    std::size_t good = 0, total = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<Edge> edges;
      while (edges.size() < 10) {
        const auto u = verts[rng.bounded(20)];
        const auto v = verts[rng.bounded(20)];
        if (u == v) continue;
        edges.push_back({u, v});
      }
      const Accumulator g = encode_graph(vcb, edges, true);
      for (const auto& [u, v] : edges) {
        good += edge_query(g, u, v, true, vcb) >= 5000;
        ++total;
      }
      for (int k = 0; k < 10; ++k) {
        const auto u = verts[rng.bounded(20)];
        const auto v = verts[rng.bounded(20)];
        if (u == v) continue;
        bool present = false;
        for (const auto& [x, y] : edges) present |= x == u && y == v;
        if (present) continue;
        good += edge_query(g, u, v, true, vcb) < 5000;
        ++total;
      }
    }
    CHECK(static_cast<double>(good) / static_cast<double>(total) >= 0.999);
  }
}

namespace {

// Seven-leaf fixture tree; traces read from the root at depth 0.
std::vector<std::pair<TreePath, std::string>> fixture_tree() {
  using R = TreeRole;
  return {
      {{R::Left, R::Left, R::Left}, "a"},
      {{R::Left, R::Right, R::Left}, "b"},
      {{R::Right, R::Right, R::Left}, "c"},
      {{R::Right, R::Right, R::Right, R::Left}, "d"},
      {{R::Right, R::Right, R::Right, R::Right}, "e"},
      {{R::Left, R::Right, R::Right, R::Left, R::Left}, "f"},
      {{R::Left, R::Right, R::Right, R::Left, R::Right}, "g"},
  };
}

}  // namespace

TEST_CASE("binary tree encoding and leaf lookup") {
  Rng rng(313);
  const std::vector<std::string> roles = {kLeftRoleName, kRightRoleName};
  const auto role_cb = make_symbol_codebook(10000, roles, rng);
  const auto leaf_cb = make_symbol_codebook(10000, kAbc, rng);
  const auto leaves = fixture_tree();
  const Accumulator t = encode_binary_tree(role_cb, leaf_cb, leaves);

  SUBCASE("trace right-right-left holds c") {
    const TreePath path = {TreeRole::Right, TreeRole::Right, TreeRole::Left};
    CHECK(tree_leaf_lookup(t, path, role_cb, leaf_cb).name == "c");
  }
  SUBCASE("all seven leaves are recoverable") {
    for (const auto& [path, name] : leaves)
      CHECK(tree_leaf_lookup(t, path, role_cb, leaf_cb).name == name);
  }
  SUBCASE("single leaf tree is one bind") {
    const std::vector<std::pair<TreePath, std::string>> one = {
        {{TreeRole::Left}, "k"}};
    const Accumulator single = encode_binary_tree(role_cb, leaf_cb, one);
    CHECK(dot(single, bind(leaf_cb.vector("k"), role_cb.vector("l"))) == 10000);
  }
  SUBCASE("complete 16-leaf trees decode perfectly") {
    std::size_t good = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::pair<TreePath, std::string>> ls;
      for (int leaf = 0; leaf < 16; ++leaf) {
        TreePath path;
        for (int d = 3; d >= 0; --d)
          path.push_back((leaf >> d) & 1 ? TreeRole::Right : TreeRole::Left);
        ls.push_back({path, kAbc[rng.bounded(26)]});
      }
      const Accumulator tree = encode_binary_tree(role_cb, leaf_cb, ls);
      for (const auto& [path, name] : ls)
        good += tree_leaf_lookup(tree, path, role_cb, leaf_cb).name == name;
    }
    CHECK(good == 200 * 16);
  }
}

TEST_CASE("stack push and pop") {
  Rng rng(314);
  const auto cb = make_symbol_codebook(10000, kAbc, rng);
  SUBCASE("pushes build the documented superposition") {
    StackState st = make_stack(10000);
    for (const auto& s : {"d", "c", "b", "a"}) st = stack_push(st, s, cb);
    Accumulator expect(10000);
    expect.add(cb.vector("a"));
    expect.add(permute(cb.vector("b"), 1));
    expect.add(permute(cb.vector("c"), 2));
    expect.add(permute(cb.vector("d"), 3));
    CHECK(st.acc == expect);
    CHECK(st.depth == 4);
  }
  SUBCASE("push then pop round trips exactly") {
    StackState st = make_stack(10000);
    st = stack_push(st, "x", cb);
    const auto [name, rest] = stack_pop(st, cb);
    CHECK(name == "x");
    CHECK(rest.depth == 0);
    CHECK(rest.acc.is_zero());
    CHECK_THROWS_AS(stack_pop(rest, cb), std::logic_error);
  }
  SUBCASE("random push and pop programs agree with a reference stack") {
    for (int trial = 0; trial < 200; ++trial) {
      StackState st = make_stack(10000);
      std::vector<std::string> shadow;
      for (int op = 0; op < 50; ++op) {
        if (shadow.empty() || rng.bounded(2) == 0) {
          const auto& sym = kAbc[rng.bounded(26)];
          st = stack_push(st, sym, cb);
          shadow.push_back(sym);
        } else {
          auto [name, rest] = stack_pop(st, cb);
          REQUIRE(name == shadow.back());
          shadow.pop_back();
          st = std::move(rest);
        }
      }
    }
  }
}

TEST_CASE("finite-state automaton encoding and stepping") {
  Rng rng(315);
  const std::vector<std::string> states = {"locked", "unlocked"};
  const std::vector<std::string> symbols = {"push", "token"};
  const auto state_cb = make_symbol_codebook(10000, states, rng);
  const auto sym_cb = make_symbol_codebook(10000, symbols, rng);

  FsaDescriptor turnstile;
  turnstile.states = states;
  turnstile.symbols = symbols;
  turnstile.start = "locked";
  turnstile.transitions = {{"locked", "push", "locked"},
                           {"locked", "token", "unlocked"},
                           {"unlocked", "push", "locked"},
                           {"unlocked", "token", "unlocked"}};
  turnstile.validate(true);
  const Accumulator a = fsa_encode(turnstile, state_cb, sym_cb);

  SUBCASE("construction matches the transition superposition") {
    Accumulator expect(10000);
    for (const auto& t : turnstile.transitions)
      expect.add(bind(sym_cb.vector(t.input),
                      bind(state_cb.vector(t.from),
                           permute(state_cb.vector(t.to), 1))));
    CHECK(a == expect);
  }
  SUBCASE("single transition automaton is one bind product") {
    FsaDescriptor one = turnstile;
    one.transitions = {{"locked", "token", "unlocked"}};
    const Accumulator enc = fsa_encode(one, state_cb, sym_cb);
    CHECK(dot(enc, bind(sym_cb.vector("token"),
                        bind(state_cb.vector("locked"),
                             permute(state_cb.vector("unlocked"), 1)))) == 10000);
  }
  SUBCASE("next-state recall follows the diagram") {
    CHECK(fsa_step(a, state_cb.vector("locked"), sym_cb.vector("push"), state_cb)
              .name == "locked");
    CHECK(fsa_step(a, state_cb.vector("locked"), sym_cb.vector("token"), state_cb)
              .name == "unlocked");
    CHECK(fsa_step(a, state_cb.vector("unlocked"), sym_cb.vector("push"), state_cb)
              .name == "locked");
    CHECK(fsa_step(a, state_cb.vector("unlocked"), sym_cb.vector("token"), state_cb)
              .name == "unlocked");
  }
  SUBCASE("validation catches bad descriptors") {
    FsaDescriptor bad = turnstile;
    bad.transitions.push_back({"locked", "push", "unlocked"});
    CHECK_THROWS_AS(bad.validate(true), std::invalid_argument);
    bad.validate(false);  // fine as a nondeterministic machine
    FsaDescriptor unknown = turnstile;
    unknown.start = "nope";
    CHECK_THROWS_AS(unknown.validate(true), std::invalid_argument);
  }
}

TEST_CASE("nondeterministic generalized-state stepping") {
  Rng rng(316);
  const std::vector<std::string> states = {"s0", "s1", "s2", "s3"};
  const std::vector<std::string> symbols = {"go"};
  const auto state_cb = make_symbol_codebook(8192, states, rng);
  const auto sym_cb = make_symbol_codebook(8192, symbols, rng);
  FsaDescriptor nfa;
  nfa.states = states;
  nfa.symbols = symbols;
  nfa.start = "s0";
  nfa.transitions = {{"s0", "go", "s1"}, {"s2", "go", "s3"}, {"s1", "go", "s1"}};
  nfa.validate(false);
  const Accumulator a = fsa_encode(nfa, state_cb, sym_cb);

  SUBCASE("singleton generalized state reduces to the deterministic step") {
    Accumulator gen(8192);
    gen.add(state_cb.vector("s0"));
    const Accumulator next = nfsa_step(a, gen, sym_cb.vector("go"), state_cb, true);
    std::size_t argmax = 0;
    std::int64_t best = dot(next, state_cb.vector(0));
    for (std::size_t i = 1; i < 4; ++i) {
      const auto s = dot(next, state_cb.vector(i));
      if (s > best) { best = s; argmax = i; }
    }
    CHECK(state_cb.name(argmax) == "s1");
  }
  SUBCASE("two active states propagate to both successors") {
    Accumulator gen(8192);
    gen.add(state_cb.vector("s0"));
    gen.add(state_cb.vector("s2"));
    const Accumulator next = nfsa_step(a, gen, sym_cb.vector("go"), state_cb, true);
    std::vector<std::pair<std::int64_t, std::string>> scored;
    for (std::size_t i = 0; i < 4; ++i)
      scored.push_back({dot(next, state_cb.vector(i)), states[i]});
    std::sort(scored.rbegin(), scored.rend());
    std::vector<std::string> top = {scored[0].second, scored[1].second};
    std::sort(top.begin(), top.end());
    CHECK(top == std::vector<std::string>{"s1", "s3"});
  }
  SUBCASE("zero generalized state stays zero") {
    const Accumulator zero(8192);
    CHECK(nfsa_step(a, zero, sym_cb.vector("go"), state_cb, false).is_zero());
    CHECK(nfsa_step(a, zero, sym_cb.vector("go"), state_cb, true).is_zero());
  }
}

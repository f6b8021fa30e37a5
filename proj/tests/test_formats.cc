#include <tropical/formats.hh>
#include <tropical/errors.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace tropical;

using std::mt19937_64;
using std::string;
using std::uniform_int_distribution;
using std::vector;

namespace
{
    auto parse_error_line(const string & text) -> int
    {
        try {
            parse_tropical_graph(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    }

    auto same(const TropicalGraph & a, const TropicalGraph & b) -> bool
    {
        if (a.size() != b.size() || a.edges() != b.edges())
            return false;
        for (Vertex v = 0; v < a.size(); ++v)
            if (a.colour_name(v) != b.colour_name(v))
                return false;
        return true;
    }
}

TEST_CASE("tropical graph text")
{
    auto g = parse_tropical_graph("tg 2 1\nc 0 Black\nc 1 White\ne 0 1\n");
    CHECK(g.size() == 2);
    CHECK(g.edges() == vector<Edge>{{0, 1}});
    CHECK(g.colour_name(0) == "Black");
    CHECK(g.colour_name(1) == "White");

    auto commented = parse_tropical_graph("# a comment\n\ntg 2 0\n# another\nc 1 X\nc 0 Y\n");
    CHECK(commented.colour_name(0) == "Y");
    CHECK(commented.edges().empty());

    CHECK_THROWS_WITH_AS(parse_tropical_graph("tg 2 1\nc 0 Black\ne 0 1\n"), doctest::Contains("vertex 1 uncoloured"),
        ParseError);
    CHECK(parse_error_line("tg 2 1\nc 0 A\nc 0 B\ne 0 1\n") == 3);
    CHECK(parse_error_line("tg 2 2\nc 0 A\nc 1 B\ne 0 1\ne 1 0\n") == 5);
    CHECK(parse_error_line("tg 2 1\nc 0 A\nc 1 B\ne 0 0\n") == 4);
    CHECK(parse_error_line("tg 2 1\nc 0 A\nc 1 B\ne 0 2\n") == 4);
    CHECK(parse_error_line("tg 2 1\nc 0 A\nc 1 B\n") > 0);
    CHECK(parse_error_line("tg 2 0\nc 0 A\nc 1 B\ne 0 1\n") == 4);
    CHECK(parse_error_line("c 0 A\n") == 1);
    CHECK(parse_error_line("# nothing\n") > 0);
    CHECK(parse_error_line("tg 1 0\nc 0\n") == 2);
    CHECK(parse_error_line("tg 1 0\nc 0 A extra\n") == 2);
    CHECK(parse_error_line("tg x 0\n") == 1);
    CHECK(parse_error_line("tg 1 0\nq 0 A\n") == 2);
    CHECK(parse_error_line("tg -1 0\n") == 1);
}

TEST_CASE("tropical graph round trips")
{
    mt19937_64 rng{17};
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, uniform_int_distribution<int>{0, 9}(rng), 0.4, {"Red", "Blue", "Green"});
        auto text = serialize_tropical_graph(g);
        CHECK(same(parse_tropical_graph(text), g));
        CHECK(serialize_tropical_graph(parse_tropical_graph(text)) == text);
    }
}

TEST_CASE("gadget names survive")
{
    auto h = build_h9();
    auto text = serialize_gadget(h);
    CHECK(text.find("# name red 6") != string::npos);
    auto back = parse_gadget(text);
    CHECK(back.names == h.names);
    CHECK(same(back.graph, h.graph));
    CHECK(parse_tropical_graph(text).size() == 9);
    CHECK_THROWS_AS(parse_gadget("# name a 3\ntg 1 0\nc 0 X\n"), ParseError);
}

TEST_CASE("digraph text")
{
    auto d = parse_digraph("dg 3 2\na 0 1\na 1 0\n");
    CHECK(d.size() == 3);
    CHECK(d.has_arc(1, 0));
    CHECK(parse_digraph(serialize_digraph(d)).arcs() == d.arcs());
    CHECK_THROWS_AS(parse_digraph("dg 2 2\na 0 1\na 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("dg 2 1\na 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("tg 2 0\n"), ParseError);
}

TEST_CASE("list text")
{
    auto lists = parse_lists("l 0 2\nl 3 1 3 5\nl 1 4 6\nl 2 2\n", 4);
    CHECK(lists[3] == vector<int>{1, 3, 5});
    CHECK(lists[1] == vector<int>{4, 6});
    CHECK(parse_lists(serialize_lists(lists), 4) == lists);
    CHECK_THROWS_AS(parse_lists("l 0 1\n", 2), ParseError);
    CHECK_THROWS_AS(parse_lists("l 0 1\nl 0 2\n", 1), ParseError);
    CHECK_THROWS_AS(parse_lists("l 2 1\n", 1), ParseError);
    CHECK_THROWS_AS(parse_lists("l 0\n", 1), ParseError);
    CHECK_THROWS_AS(parse_lists("l 0 x\n", 1), ParseError);
}

TEST_CASE("dimacs")
{
    auto f = parse_dimacs("p cnf 1 1\n1 0\n");
    CHECK(f.variables == 1);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == vector<Literal>{Literal{0, true}});

    auto g = parse_dimacs("c comment\np cnf 3 2\n1 -2\n 3 0 -1 0\n");
    REQUIRE(g.clauses.size() == 2);
    CHECK(g.clauses[0] == vector<Literal>{{0, true}, {1, false}, {2, true}});
    CHECK(g.clauses[1] == vector<Literal>{{0, false}});
    auto again = parse_dimacs(serialize_dimacs(g));
    CHECK(again.variables == 3);
    CHECK(again.clauses == g.clauses);

    CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\nx 0\n"), ParseError);

    auto nae = parse_dimacs_nae("p cnf 3 1\n1 2 3 0\n");
    REQUIRE(nae.clauses.size() == 1);
    CHECK(nae.clauses[0] == std::array<int, 3>{0, 1, 2});
    CHECK(parse_dimacs_nae(serialize_dimacs(nae)).clauses == nae.clauses);
    CHECK_THROWS_AS(parse_dimacs_nae("p cnf 1 1\n1 -1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_nae("p cnf 3 1\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_nae("p cnf 3 1\n1 2 2 0\n"), ParseError);
}

TEST_CASE("files")
{
    CHECK_THROWS_AS(read_file("/nonexistent/graph.tg"), InputError);
}

#ifndef TROPICAL_FORMATS_HH
#define TROPICAL_FORMATS_HH 1

#include <tropical/gadgets.hh>
#include <tropical/graph.hh>

#include <map>
#include <string>
#include <vector>

namespace tropical
{
    /**
     * Text format: '#' starts a comment line, then a header "tg n m", n lines
     * "c index colour" and m lines "e u v", indices from 0. Throws ParseError
     * naming the offending line.
     */
    auto parse_tropical_graph(const std::string & text) -> TropicalGraph;

    /// Like parse_tropical_graph, also reading "# name label index" comments.
    auto parse_gadget(const std::string & text) -> GadgetGraph;

    auto serialize_tropical_graph(const TropicalGraph & g) -> std::string;

    /// Names go out as "# name label index" comments ahead of the header.
    auto serialize_gadget(const GadgetGraph & g) -> std::string;

    /// Header "dg n m", then m lines "a u v".
    auto parse_digraph(const std::string & text) -> Digraph;

    auto serialize_digraph(const Digraph & d) -> std::string;

    /// Lines "l index t1 t2 ...", exactly one per vertex.
    auto parse_lists(const std::string & text, int vertices) -> std::vector<std::vector<int>>;

    auto serialize_lists(const std::vector<std::vector<int>> & lists) -> std::string;

    /// Header "p cnf variables clauses", then 0-terminated clauses.
    auto parse_dimacs(const std::string & text) -> CnfFormula;

    /// DIMACS where every clause has three distinct positive literals.
    auto parse_dimacs_nae(const std::string & text) -> NaeFormula;

    auto serialize_dimacs(const CnfFormula & f) -> std::string;

    auto serialize_dimacs(const NaeFormula & f) -> std::string;

    /// Reads a whole file. Throws InputError if it cannot be opened.
    auto read_file(const std::string & path) -> std::string;

    auto write_file(const std::string & path, const std::string & text) -> void;
}

#endif

#include <tropical/formats.hh>
#include <tropical/errors.hh>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

using namespace tropical;

using std::map;
using std::optional;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    struct Line
    {
        int number;
        vector<string> words;
    };

    auto split_lines(const string & text) -> vector<Line>
    {
        vector<Line> result;
        std::istringstream in{text};
        string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            Line line{number, {}};
            std::istringstream words{raw};
            string w;
            while (words >> w)
                line.words.push_back(w);
            result.push_back(std::move(line));
        }
        return result;
    }

    auto number_of_lines(const string & text) -> int
    {
        int n = 0;
        for (char c : text)
            n += c == '\n';
        return std::max(1, n + (text.empty() || text.back() == '\n' ? 0 : 1));
    }

    auto to_int(const string & word, int line) -> int
    {
        int value = 0;
        auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || end != word.data() + word.size())
            throw ParseError{line, "expected an integer, got '" + word + "'"};
        return value;
    }

    auto index(const string & word, int size, int line) -> int
    {
        int v = to_int(word, line);
        if (v < 0 || v >= size)
            throw ParseError{line, "vertex " + word + " out of range"};
        return v;
    }

    auto expect_words(const Line & line, std::size_t count) -> void
    {
        if (line.words.size() != count)
            throw ParseError{line.number, "expected " + to_string(count) + " fields, got " + to_string(line.words.size())};
    }

    struct Header
    {
        int line, size, count;
    };

    // Skips blanks and comments, returning the header and the lines after it.
    auto read_header(const vector<Line> & lines, const string & keyword, int total) -> std::pair<Header, std::size_t>
    {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            auto & line = lines[i];
            if (line.words.empty() || line.words[0][0] == '#')
                continue;
            if (line.words[0] != keyword)
                throw ParseError{line.number, "expected header '" + keyword + " n m'"};
            expect_words(line, 3);
            int n = to_int(line.words[1], line.number), m = to_int(line.words[2], line.number);
            if (n < 0 || m < 0)
                throw ParseError{line.number, "negative count in header"};
            return {Header{line.number, n, m}, i + 1};
        }
        throw ParseError{total, "missing '" + keyword + "' header"};
    }

    auto read_graph(const string & text, map<string, Vertex> * names) -> TropicalGraph
    {
        auto lines = split_lines(text);
        auto [header, start] = read_header(lines, "tg", number_of_lines(text));

        vector<optional<string>> colours(header.size);
        vector<Edge> edges;
        set<Edge> seen;
        for (auto i = start; i < lines.size(); ++i) {
            auto & line = lines[i];
            if (line.words.empty() || line.words[0][0] == '#')
                continue;
            if (line.words[0] == "c") {
                expect_words(line, 3);
                auto v = index(line.words[1], header.size, line.number);
                if (colours[v])
                    throw ParseError{line.number, "vertex " + to_string(v) + " coloured twice"};
                colours[v] = line.words[2];
            }
            else if (line.words[0] == "e") {
                expect_words(line, 3);
                auto u = index(line.words[1], header.size, line.number), v = index(line.words[2], header.size, line.number);
                if (u == v)
                    throw ParseError{line.number, "loop on vertex " + to_string(u)};
                if (! seen.insert(Edge{std::min(u, v), std::max(u, v)}).second)
                    throw ParseError{line.number, "duplicate edge " + to_string(u) + " " + to_string(v)};
                if (int(edges.size()) == header.count)
                    throw ParseError{line.number, "more edges than the header declares"};
                edges.emplace_back(u, v);
            }
            else
                throw ParseError{line.number, "unknown line type '" + line.words[0] + "'"};
        }

        for (Vertex v = 0; v < header.size; ++v)
            if (! colours[v])
                throw ParseError{header.line, "vertex " + to_string(v) + " uncoloured"};
        if (int(edges.size()) != header.count)
            throw ParseError{header.line, "header declares " + to_string(header.count) + " edges, found " + to_string(edges.size())};

        if (names)
            for (auto & line : lines) {
                if (line.words.size() >= 1 && line.words[0] == "#" && line.words.size() >= 2 && line.words[1] == "name") {
                    expect_words(line, 4);
                    auto v = index(line.words[3], header.size, line.number);
                    if (! names->emplace(line.words[2], v).second)
                        throw ParseError{line.number, "name " + line.words[2] + " given twice"};
                }
            }

        vector<string> plain;
        for (auto & c : colours)
            plain.push_back(*c);
        return TropicalGraph{header.size, edges, plain};
    }
}

auto tropical::parse_tropical_graph(const string & text) -> TropicalGraph
{
    return read_graph(text, nullptr);
}

auto tropical::parse_gadget(const string & text) -> GadgetGraph
{
    GadgetGraph result;
    result.graph = read_graph(text, &result.names);
    return result;
}

auto tropical::serialize_tropical_graph(const TropicalGraph & g) -> string
{
    std::ostringstream out;
    out << "tg " << g.size() << ' ' << g.edges().size() << '\n';
    for (Vertex v = 0; v < g.size(); ++v)
        out << "c " << v << ' ' << g.colour_name(v) << '\n';
    for (auto & [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

auto tropical::serialize_gadget(const GadgetGraph & g) -> string
{
    std::ostringstream out;
    for (auto & [label, v] : g.names)
        out << "# name " << label << ' ' << v << '\n';
    return out.str() + serialize_tropical_graph(g.graph);
}

auto tropical::parse_digraph(const string & text) -> Digraph
{
    auto lines = split_lines(text);
    auto [header, start] = read_header(lines, "dg", number_of_lines(text));
    vector<Edge> arcs;
    set<Edge> seen;
    for (auto i = start; i < lines.size(); ++i) {
        auto & line = lines[i];
        if (line.words.empty() || line.words[0][0] == '#')
            continue;
        if (line.words[0] != "a")
            throw ParseError{line.number, "unknown line type '" + line.words[0] + "'"};
        expect_words(line, 3);
        auto u = index(line.words[1], header.size, line.number), v = index(line.words[2], header.size, line.number);
        if (u == v)
            throw ParseError{line.number, "loop on vertex " + to_string(u)};
        if (! seen.insert(Edge{u, v}).second)
            throw ParseError{line.number, "duplicate arc " + to_string(u) + " " + to_string(v)};
        if (int(arcs.size()) == header.count)
            throw ParseError{line.number, "more arcs than the header declares"};
        arcs.emplace_back(u, v);
    }
    if (int(arcs.size()) != header.count)
        throw ParseError{header.line, "header declares " + to_string(header.count) + " arcs, found " + to_string(arcs.size())};
    return Digraph{header.size, arcs};
}

auto tropical::serialize_digraph(const Digraph & d) -> string
{
    std::ostringstream out;
    out << "dg " << d.size() << ' ' << d.arcs().size() << '\n';
    for (auto & [u, v] : d.arcs())
        out << "a " << u << ' ' << v << '\n';
    return out.str();
}

auto tropical::parse_lists(const string & text, int vertices) -> vector<vector<int>>
{
    vector<optional<vector<int>>> lists(vertices);
    for (auto & line : split_lines(text)) {
        if (line.words.empty() || line.words[0][0] == '#')
            continue;
        if (line.words[0] != "l")
            throw ParseError{line.number, "unknown line type '" + line.words[0] + "'"};
        if (line.words.size() < 3)
            throw ParseError{line.number, "a list needs a vertex and at least one entry"};
        auto v = index(line.words[1], vertices, line.number);
        if (lists[v])
            throw ParseError{line.number, "vertex " + to_string(v) + " has two lists"};
        vector<int> entries;
        for (std::size_t i = 2; i < line.words.size(); ++i)
            entries.push_back(to_int(line.words[i], line.number));
        lists[v] = entries;
    }
    vector<vector<int>> result;
    for (int v = 0; v < vertices; ++v) {
        if (! lists[v])
            throw ParseError{number_of_lines(text), "vertex " + to_string(v) + " has no list"};
        result.push_back(*lists[v]);
    }
    return result;
}

auto tropical::serialize_lists(const vector<vector<int>> & lists) -> string
{
    std::ostringstream out;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        out << "l " << v;
        for (auto x : lists[v])
            out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

namespace
{
    struct DimacsClause
    {
        int line;
        vector<int> literals;
    };

    auto read_dimacs(const string & text) -> std::pair<int, vector<DimacsClause>>
    {
        auto lines = split_lines(text);
        optional<Header> header;
        vector<DimacsClause> clauses;
        DimacsClause current{0, {}};
        for (auto & line : lines) {
            if (line.words.empty() || line.words[0] == "c" || line.words[0][0] == '%')
                continue;
            if (line.words[0] == "p") {
                if (header)
                    throw ParseError{line.number, "second problem line"};
                expect_words(line, 4);
                if (line.words[1] != "cnf")
                    throw ParseError{line.number, "expected 'p cnf'"};
                int v = to_int(line.words[2], line.number), c = to_int(line.words[3], line.number);
                if (v < 0 || c < 0)
                    throw ParseError{line.number, "negative count in header"};
                header = Header{line.number, v, c};
                continue;
            }
            if (! header)
                throw ParseError{line.number, "clause before the 'p cnf' line"};
            for (auto & w : line.words) {
                int x = to_int(w, line.number);
                if (x == 0) {
                    clauses.push_back(current);
                    current = DimacsClause{0, {}};
                    continue;
                }
                if (x < -header->size || x > header->size)
                    throw ParseError{line.number, "literal " + w + " out of range"};
                if (current.literals.empty())
                    current.line = line.number;
                current.literals.push_back(x);
            }
        }
        if (! header)
            throw ParseError{number_of_lines(text), "missing 'p cnf' line"};
        if (! current.literals.empty())
            throw ParseError{current.line, "clause not terminated by 0"};
        if (int(clauses.size()) != header->count)
            throw ParseError{header->line, "header declares " + to_string(header->count) + " clauses, found " + to_string(clauses.size())};
        return {header->size, clauses};
    }
}

auto tropical::parse_dimacs(const string & text) -> CnfFormula
{
    auto [variables, clauses] = read_dimacs(text);
    CnfFormula f{variables, {}};
    for (auto & c : clauses) {
        f.clauses.emplace_back();
        for (auto x : c.literals)
            f.clauses.back().push_back(Literal{std::abs(x) - 1, x > 0});
    }
    return f;
}

auto tropical::parse_dimacs_nae(const string & text) -> NaeFormula
{
    auto [variables, clauses] = read_dimacs(text);
    NaeFormula f{variables, {}};
    for (auto & c : clauses) {
        if (c.literals.size() != 3)
            throw ParseError{c.line, "NAE clauses need exactly three literals"};
        for (auto x : c.literals)
            if (x < 0)
                throw ParseError{c.line, "NAE clauses take positive literals only"};
        std::array<int, 3> triple{c.literals[0] - 1, c.literals[1] - 1, c.literals[2] - 1};
        if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
            throw ParseError{c.line, "NAE clause repeats a variable"};
        f.clauses.push_back(triple);
    }
    return f;
}

auto tropical::serialize_dimacs(const CnfFormula & f) -> string
{
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (auto & c : f.clauses) {
        for (auto & l : c)
            out << (l.positive ? "" : "-") << l.variable + 1 << ' ';
        out << "0\n";
    }
    return out.str();
}

auto tropical::serialize_dimacs(const NaeFormula & f) -> string
{
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (auto & c : f.clauses)
        out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << " 0\n";
    return out.str();
}

auto tropical::read_file(const string & path) -> string
{
    std::ifstream in{path};
    if (! in)
        throw InputError{"cannot open " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto tropical::write_file(const string & path, const string & text) -> void
{
    std::ofstream out{path};
    if (! out)
        throw InputError{"cannot write " + path};
    out << text;
}

#include <tropical/two_sat.hh>
#include <tropical/errors.hh>

#include <algorithm>
#include <string>

using namespace tropical;

using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    // Node 2v is v true, 2v + 1 is v false.
    auto node(const Literal & l) -> int
    {
        return 2 * l.variable + (l.positive ? 0 : 1);
    }

    auto holds(const Literal & l, const vector<bool> & assignment) -> bool
    {
        return assignment[l.variable] == l.positive;
    }
}

auto TwoSatFormula::satisfied_by(const vector<bool> & assignment) const -> bool
{
    return std::all_of(clauses.begin(), clauses.end(), [&](const TwoClause & c) {
        return holds(c.first, assignment) || holds(c.second, assignment);
    });
}

auto tropical::solve_2sat(const TwoSatFormula & formula) -> optional<vector<bool>>
{
    int n = formula.variables;
    int nodes = 2 * n;
    for (auto & [a, b] : formula.clauses)
        for (auto & l : {a, b})
            if (l.variable < 0 || l.variable >= n)
                throw InputError{"clause mentions variable " + to_string(l.variable) + " of " + to_string(n)};

    // (a or b) gives not a -> b and not b -> a, stored as compressed rows.
    vector<int> start(nodes + 1, 0), arcs(2 * formula.clauses.size());
    for (auto & [a, b] : formula.clauses) {
        ++start[(node(a) ^ 1) + 1];
        ++start[(node(b) ^ 1) + 1];
    }
    for (int i = 0; i < nodes; ++i)
        start[i + 1] += start[i];
    vector<int> fill(start.begin(), start.end() - 1);
    for (auto & [a, b] : formula.clauses) {
        arcs[fill[node(a) ^ 1]++] = node(b);
        arcs[fill[node(b) ^ 1]++] = node(a);
    }

    // Iterative Tarjan. Components come out in reverse topological order.
    vector<int> index(nodes, -1), low(nodes, 0), component(nodes, -1), stack, call, edge_pos(nodes, 0);
    vector<char> on_stack(nodes, 0);
    int next_index = 0, next_component = 0;

    for (int root = 0; root < nodes; ++root) {
        if (index[root] != -1)
            continue;
        call.push_back(root);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        edge_pos[root] = start[root];

        while (! call.empty()) {
            int v = call.back();
            if (edge_pos[v] < start[v + 1]) {
                int w = arcs[edge_pos[v]++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    edge_pos[w] = start[w];
                    call.push_back(w);
                }
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }

            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component[w] = next_component;
                } while (w != v);
                ++next_component;
            }
            call.pop_back();
            if (! call.empty())
                low[call.back()] = std::min(low[call.back()], low[v]);
        }
    }

    vector<bool> assignment(n);
    for (int v = 0; v < n; ++v) {
        if (component[2 * v] == component[2 * v + 1])
            return nullopt;
        assignment[v] = component[2 * v] < component[2 * v + 1];
    }

    if (! formula.satisfied_by(assignment))
        throw InternalError{"2-SAT assignment does not satisfy the formula"};
    return assignment;
}

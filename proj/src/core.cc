#include <tropical/core.hh>
#include <tropical/solver.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace tropical;

using std::function;
using std::mt19937_64;
using std::nullopt;
using std::optional;
using std::uint64_t;
using std::vector;

namespace
{
    // An endomorphism of g whose image avoids v, in g's indices.
    auto retract_avoiding(const TropicalGraph & g, Vertex v) -> optional<VertexMap>
    {
        auto [smaller, kept] = without_vertex(g, v);
        auto out = solve_trop_hom(g, smaller);
        if (! out.solvable())
            return nullopt;
        VertexMap e(g.size());
        for (Vertex x = 0; x < g.size(); ++x)
            e[x] = kept[(*out.witness)[x]];
        return e;
    }
}

auto tropical::find_proper_retract(const TropicalGraph & g) -> optional<VertexMap>
{
    for (Vertex v = 0; v < g.size(); ++v)
        if (auto e = retract_avoiding(g, v))
            return e;
    return nullopt;
}

auto tropical::core(const TropicalGraph & g, optional<uint64_t> shuffle_seed) -> CoreResult
{
    vector<Vertex> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    if (shuffle_seed) {
        mt19937_64 rng{*shuffle_seed};
        std::shuffle(order.begin(), order.end(), rng);
    }

    // A vertex that cannot be dropped now cannot be dropped from any retract
    // either, so one pass suffices.
    TropicalGraph current = g;
    vector<Vertex> vertices(g.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    VertexMap to_current = vertices;

    for (auto original : order) {
        auto it = std::find(vertices.begin(), vertices.end(), original);
        if (it == vertices.end())
            continue;
        Vertex v = Vertex(it - vertices.begin());
        auto [smaller, kept] = without_vertex(current, v);
        auto out = solve_trop_hom(current, smaller);
        if (! out.solvable())
            continue;
        for (auto & x : to_current)
            x = (*out.witness)[x];
        vector<Vertex> new_vertices;
        for (auto k : kept)
            new_vertices.push_back(vertices[k]);
        vertices = std::move(new_vertices);
        current = std::move(smaller);
    }

    // The composed map restricted to the core is an automorphism; undo it so
    // core vertices are fixed.
    vector<Vertex> inverse(current.size());
    for (int i = 0; i < current.size(); ++i)
        inverse[to_current[vertices[i]]] = i;
    for (auto & x : to_current)
        x = inverse[x];

    return CoreResult{std::move(current), std::move(vertices), std::move(to_current)};
}

auto tropical::is_core(const TropicalGraph & g) -> bool
{
    return ! find_proper_retract(g);
}

auto tropical::iso_check(const TropicalGraph & a, const TropicalGraph & b) -> optional<VertexMap>
{
    if (a.size() != b.size() || a.edges().size() != b.edges().size())
        return nullopt;

    int n = a.size();
    VertexMap f(n, -1);
    vector<char> used(n, 0);

    function<bool(int)> extend = [&](int x) -> bool {
        if (x == n)
            return true;
        for (Vertex y = 0; y < n; ++y) {
            if (used[y] || a.degree(x) != b.degree(y) || a.colour_name(x) != b.colour_name(y))
                continue;
            bool ok = true;
            for (Vertex w = 0; w < x && ok; ++w)
                ok = a.adjacent(x, w) == b.adjacent(y, f[w]);
            if (! ok)
                continue;
            f[x] = y;
            used[y] = 1;
            if (extend(x + 1))
                return true;
            used[y] = 0;
        }
        f[x] = -1;
        return false;
    };

    if (! extend(0))
        return nullopt;
    return f;
}

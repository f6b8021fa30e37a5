#include <tropical/solver.hh>

#include <algorithm>
#include <bit>
#include <set>

using namespace tropical;

using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    using Word = uint64_t;

    auto words_for(int d) -> int
    {
        return (d + 63) / 64;
    }

    /// rows[a] is the set of b with (a, b) allowed.
    struct Relation
    {
        int words;
        vector<Word> rows;

        auto row(int a) const -> const Word * { return rows.data() + size_t(a) * words; }
    };

    template <typename Rows_>
    auto make_relation(int d, Rows_ && neighbours_of) -> Relation
    {
        Relation r{words_for(d), {}};
        r.rows.assign(size_t(d) * r.words, 0);
        for (int a = 0; a < d; ++a)
            for (auto b : neighbours_of(a))
                r.rows[size_t(a) * r.words + b / 64] |= Word{1} << (b % 64);
        return r;
    }

    struct Watcher
    {
        int var;
        int relation;
    };

    class Engine
    {
    private:
        int _n, _w;
        vector<Relation> _relations;
        vector<vector<Watcher>> _watch;
        vector<Word> _dom;
        vector<int> _trail_vars;
        vector<Word> _trail_words;
        vector<int> _queue;
        vector<char> _queued;
        vector<Word> _scratch;

        auto save(int v) -> void
        {
            _trail_vars.push_back(v);
            _trail_words.insert(_trail_words.end(), dom(v), dom(v) + _w);
        }

        auto enqueue(int v) -> void
        {
            if (! _queued[v]) {
                _queued[v] = 1;
                _queue.push_back(v);
            }
        }

        auto clear_queue() -> void
        {
            for (auto v : _queue)
                _queued[v] = 0;
            _queue.clear();
        }

        // Removes values of x without support in y. Returns false on wipeout.
        auto revise(int x, int y, const Relation & rel, bool & changed) -> bool
        {
            ++stats.propagations;
            Word * dx = dom(x);
            const Word * dy = dom(y);
            bool any = false;
            changed = false;
            for (int i = 0; i < _w; ++i) {
                Word keep = dx[i];
                for (Word bits = dx[i]; bits; bits &= bits - 1) {
                    int a = i * 64 + std::countr_zero(bits);
                    const Word * row = rel.row(a);
                    bool supported = false;
                    for (int j = 0; j < _w && ! supported; ++j)
                        supported = (row[j] & dy[j]) != 0;
                    if (! supported)
                        keep &= ~(Word{1} << (a % 64));
                }
                _scratch[i] = keep;
                if (keep != dx[i])
                    changed = true;
                if (keep)
                    any = true;
            }
            if (changed) {
                save(x);
                std::copy(_scratch.begin(), _scratch.begin() + _w, dom(x));
            }
            return any;
        }

    public:
        SolveStats stats;

        Engine(int n, int d, vector<Relation> relations, vector<vector<Watcher>> watch) :
            _n(n),
            _w(words_for(std::max(d, 1))),
            _relations(std::move(relations)),
            _watch(std::move(watch)),
            _dom(size_t(n) * _w, 0),
            _queued(n, 0),
            _scratch(_w, 0)
        {
        }

        auto dom(int v) -> Word * { return _dom.data() + size_t(v) * _w; }

        auto allow(int v, int a) -> void { dom(v)[a / 64] |= Word{1} << (a % 64); }

        auto count(int v) -> int
        {
            int c = 0;
            for (int i = 0; i < _w; ++i)
                c += std::popcount(dom(v)[i]);
            return c;
        }

        auto values(int v) -> vector<int>
        {
            vector<int> result;
            for (int i = 0; i < _w; ++i)
                for (Word bits = dom(v)[i]; bits; bits &= bits - 1)
                    result.push_back(i * 64 + std::countr_zero(bits));
            return result;
        }

        auto mark() const -> size_t { return _trail_vars.size(); }

        auto restore(size_t to) -> void
        {
            while (_trail_vars.size() > to) {
                int v = _trail_vars.back();
                _trail_vars.pop_back();
                std::copy(_trail_words.end() - _w, _trail_words.end(), dom(v));
                _trail_words.resize(_trail_words.size() - _w);
            }
        }

        auto propagate() -> bool
        {
            while (! _queue.empty()) {
                int y = _queue.back();
                _queue.pop_back();
                _queued[y] = 0;
                for (auto & [x, r] : _watch[y]) {
                    bool changed;
                    if (! revise(x, y, _relations[r], changed)) {
                        clear_queue();
                        return false;
                    }
                    if (changed)
                        enqueue(x);
                }
            }
            return true;
        }

        auto initial_propagate() -> bool
        {
            for (int v = 0; v < _n; ++v) {
                if (count(v) == 0)
                    return false;
                enqueue(v);
            }
            return propagate();
        }

        auto assign(int v, int a) -> bool
        {
            save(v);
            std::fill(dom(v), dom(v) + _w, 0);
            allow(v, a);
            enqueue(v);
            return propagate();
        }

        auto search(const vector<int> & vars) -> bool
        {
            int best = -1, best_count = 0;
            for (auto v : vars) {
                int c = count(v);
                if (c > 1 && (best == -1 || c < best_count)) {
                    best = v;
                    best_count = c;
                }
            }
            if (best == -1)
                return true;

            ++stats.nodes;
            for (auto a : values(best)) {
                auto m = mark();
                if (assign(best, a) && search(vars))
                    return true;
                restore(m);
            }
            return false;
        }

        auto enumerate(int i, Enumeration & out, size_t limit) -> bool
        {
            if (i == _n) {
                if (out.maps.size() == limit) {
                    out.truncated = true;
                    return false;
                }
                VertexMap f(_n);
                for (int v = 0; v < _n; ++v)
                    f[v] = values(v).front();
                out.maps.push_back(std::move(f));
                return true;
            }

            ++stats.nodes;
            for (auto a : values(i)) {
                auto m = mark();
                bool keep_going = true;
                if (assign(i, a))
                    keep_going = enumerate(i + 1, out, limit);
                restore(m);
                if (! keep_going)
                    return false;
            }
            return true;
        }

        auto witness() -> VertexMap
        {
            VertexMap f(_n);
            for (int v = 0; v < _n; ++v)
                f[v] = values(v).front();
            return f;
        }

        auto watchers(int v) const -> const vector<Watcher> & { return _watch[v]; }
    };

    auto check_lists(int source_size, int target_size, const ListAssignment & lists) -> void
    {
        if (int(lists.lists.size()) != source_size)
            throw InputError{"list assignment has " + to_string(lists.lists.size()) + " lists for " +
                to_string(source_size) + " source vertices"};
        for (int v = 0; v < source_size; ++v)
            for (auto t : lists.lists[v])
                if (t < 0 || t >= target_size)
                    throw InputError{"list of vertex " + to_string(v) + " names target vertex " + to_string(t) +
                        " which is out of range"};
    }

    auto graph_engine(const Graph & source, const Graph & target, const ListAssignment & lists) -> Engine
    {
        check_lists(source.size(), target.size(), lists);

        vector<Relation> relations;
        relations.push_back(make_relation(target.size(), [&](int a) { return target.neighbours(a); }));

        vector<vector<Watcher>> watch(source.size());
        for (auto & [u, v] : source.edges()) {
            watch[v].push_back({u, 0});
            watch[u].push_back({v, 0});
        }

        Engine e{source.size(), target.size(), std::move(relations), std::move(watch)};
        for (int v = 0; v < source.size(); ++v)
            for (auto t : lists.lists[v])
                e.allow(v, t);
        return e;
    }

    // Components of the constraint graph, each in ascending order.
    auto constraint_components(Engine & e, int n) -> vector<vector<int>>
    {
        vector<int> label(n, -1);
        vector<vector<int>> result;
        for (int root = 0; root < n; ++root) {
            if (label[root] != -1)
                continue;
            int id = int(result.size());
            result.emplace_back();
            vector<int> stack{root};
            label[root] = id;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                result[id].push_back(v);
                for (auto & w : e.watchers(v))
                    if (label[w.var] == -1) {
                        label[w.var] = id;
                        stack.push_back(w.var);
                    }
            }
            std::sort(result[id].begin(), result[id].end());
        }
        return result;
    }

    auto run_search(Engine & e, int n) -> SolveOutcome
    {
        SolveOutcome result;
        if (e.initial_propagate()) {
            bool ok = true;
            for (auto & vars : constraint_components(e, n))
                if (! e.search(vars)) {
                    ok = false;
                    break;
                }
            if (ok) {
                result.status = SolveStatus::Solvable;
                result.witness = e.witness();
            }
        }
        result.stats = e.stats;
        return result;
    }

    auto check_witness(const SolveOutcome & out, const Graph & source, const Graph & target,
        const ListAssignment & lists) -> void
    {
        if (! out.witness)
            return;
        if (! validate_graph_hom(source, target, *out.witness))
            throw InternalError{"solver produced a map that is not a homomorphism"};
        for (Vertex v = 0; v < source.size(); ++v) {
            auto & l = lists.lists[v];
            if (std::find(l.begin(), l.end(), (*out.witness)[v]) == l.end())
                throw InternalError{"solver produced a map that violates a list"};
        }
    }
}

auto tropical::full_lists(int source_size, int target_size) -> ListAssignment
{
    vector<Vertex> all(target_size);
    for (int t = 0; t < target_size; ++t)
        all[t] = t;
    return ListAssignment{vector<vector<Vertex>>(source_size, all)};
}

auto tropical::colour_lists(const TropicalGraph & source, const TropicalGraph & target) -> ListAssignment
{
    vector<vector<Vertex>> by_colour(source.palette().size());
    for (int c = 0; c < int(source.palette().size()); ++c)
        by_colour[c] = target.colour_class(source.palette()[c]);

    ListAssignment result;
    result.lists.reserve(source.size());
    for (Vertex v = 0; v < source.size(); ++v)
        result.lists.push_back(by_colour[source.colour(v)]);
    return result;
}

auto tropical::solve_list_hom(const Graph & source, const Graph & target, const ListAssignment & lists) -> SolveOutcome
{
    auto e = graph_engine(source, target, lists);
    auto out = run_search(e, source.size());
    check_witness(out, source, target, lists);
    return out;
}

auto tropical::enumerate_homs(const Graph & source, const Graph & target, const ListAssignment & lists,
    size_t limit) -> Enumeration
{
    auto e = graph_engine(source, target, lists);
    Enumeration result;
    if (e.initial_propagate())
        e.enumerate(0, result, limit);
    return result;
}

auto tropical::solve_trop_hom(const TropicalGraph & source, const TropicalGraph & target) -> SolveOutcome
{
    return solve_list_hom(source, target, colour_lists(source, target));
}

auto tropical::enumerate_trop_homs(const TropicalGraph & source, const TropicalGraph & target, size_t limit)
    -> Enumeration
{
    return enumerate_homs(source, target, colour_lists(source, target), limit);
}

auto tropical::solve_digraph_hom(const Digraph & source, const Digraph & target) -> SolveOutcome
{
    int d = target.size();
    vector<Relation> relations;
    relations.push_back(make_relation(d, [&](int a) { return target.out_neighbours(a); }));
    relations.push_back(make_relation(d, [&](int b) { return target.in_neighbours(b); }));

    vector<vector<Watcher>> watch(source.size());
    for (auto & [x, y] : source.arcs()) {
        watch[y].push_back({x, 0});
        watch[x].push_back({y, 1});
    }

    Engine e{source.size(), d, std::move(relations), std::move(watch)};
    for (int v = 0; v < source.size(); ++v)
        for (int t = 0; t < d; ++t)
            e.allow(v, t);

    auto out = run_search(e, source.size());
    if (out.witness && ! validate_digraph_hom(source, target, *out.witness))
        throw InternalError{"solver produced a map that is not a digraph homomorphism"};
    return out;
}

auto tropical::solve_retraction(const TropicalGraph & host, const TropicalGraph & target,
    const VertexMap & embedded_copy) -> SolveOutcome
{
    if (int(embedded_copy.size()) != target.size())
        throw InputError{"embedded copy must map every target vertex"};
    for (auto h : embedded_copy)
        if (h < 0 || h >= host.size())
            throw InputError{"embedded copy names host vertex " + to_string(h) + " which is out of range"};
    if (set<Vertex>(embedded_copy.begin(), embedded_copy.end()).size() != embedded_copy.size())
        throw InputError{"embedded copy is not injective"};
    if (! validate_hom(target, host, embedded_copy))
        throw InputError{"embedded copy is not a colour preserving homomorphism"};

    auto lists = colour_lists(host, target);
    for (Vertex t = 0; t < target.size(); ++t)
        lists.lists[embedded_copy[t]] = {t};
    return solve_list_hom(host, target, lists);
}

auto tropical::arc_consistent_lists(const Graph & source, const Graph & target, const ListAssignment & lists)
    -> optional<ListAssignment>
{
    auto e = graph_engine(source, target, lists);
    if (! e.initial_propagate())
        return std::nullopt;
    ListAssignment result;
    for (int v = 0; v < source.size(); ++v)
        result.lists.push_back(e.values(v));
    return result;
}
